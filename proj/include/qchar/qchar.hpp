#pragma once

#include "qchar/analysis.hpp"
#include "qchar/fm_engine.hpp"
#include "qchar/qlaurent.hpp"
#include "qchar/qpolynomial.hpp"
#include "qchar/restriction.hpp"
#include "qchar/rootdata.hpp"
#include "qchar/screening.hpp"
#include "qchar/sl2char.hpp"
#include "qchar/verify.hpp"
#include "qchar/ymonomial.hpp"
