#pragma once

#include "oom/decision.hpp"
#include "oom/er_text.hpp"
#include "oom/error.hpp"
#include "oom/evaluate.hpp"
#include "oom/extended_real.hpp"
#include "oom/finite_set.hpp"
#include "oom/formula.hpp"
#include "oom/harness.hpp"
#include "oom/kappa.hpp"
#include "oom/oom_value.hpp"
#include "oom/polynomial.hpp"
#include "oom/rational.hpp"
#include "oom/star.hpp"
