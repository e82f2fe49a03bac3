#pragma once

#include "hirzebruch/arrangement.hpp"
#include "hirzebruch/catalog.hpp"
#include "hirzebruch/cyclofield.hpp"
#include "hirzebruch/errors.hpp"
#include "hirzebruch/exact_lp.hpp"
#include "hirzebruch/extendability.hpp"
#include "hirzebruch/hopf.hpp"
#include "hirzebruch/json_io.hpp"
#include "hirzebruch/metric.hpp"
#include "hirzebruch/rational.hpp"
#include "hirzebruch/report.hpp"
