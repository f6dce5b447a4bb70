#pragma once

#include "dlc/alpha.hpp"
#include "dlc/bernoulli.hpp"
#include "dlc/bounds.hpp"
#include "dlc/corpus.hpp"
#include "dlc/entropy.hpp"
#include "dlc/extension.hpp"
#include "dlc/golden.hpp"
#include "dlc/logconcave.hpp"
#include "dlc/moriguti.hpp"
#include "dlc/pmf.hpp"
#include "dlc/quadrature.hpp"
#include "dlc/report.hpp"
#include "dlc/specfile.hpp"
