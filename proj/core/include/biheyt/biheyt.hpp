#pragma once

#include "biheyt/algebra.hpp"
#include "biheyt/battery.hpp"
#include "biheyt/budget.hpp"
#include "biheyt/duality.hpp"
#include "biheyt/element_set.hpp"
#include "biheyt/error.hpp"
#include "biheyt/free_algebra.hpp"
#include "biheyt/io.hpp"
#include "biheyt/morphisms.hpp"
#include "biheyt/poset.hpp"
#include "biheyt/rules.hpp"
#include "biheyt/term.hpp"
