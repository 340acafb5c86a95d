#pragma once

#include <nullag/error.hpp>
#include <nullag/expr.hpp>
#include <nullag/hierarchy.hpp>
#include <nullag/jet.hpp>
#include <nullag/numeric.hpp>
#include <nullag/sl2.hpp>
#include <nullag/text.hpp>
#include <nullag/variational.hpp>
