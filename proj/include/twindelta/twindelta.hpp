#pragma once

#include "twindelta/errors.hpp"
#include "twindelta/hardwall.hpp"
#include "twindelta/io.hpp"
#include "twindelta/model.hpp"
#include "twindelta/oracle.hpp"
#include "twindelta/quadrature.hpp"
#include "twindelta/relative.hpp"
#include "twindelta/scan.hpp"
#include "twindelta/specfun.hpp"
