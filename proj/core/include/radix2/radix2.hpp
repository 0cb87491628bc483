#pragma once

#include "radix2/algebra.hpp"
#include "radix2/complex_field.hpp"
#include "radix2/error.hpp"
#include "radix2/inverse.hpp"
#include "radix2/iterative.hpp"
#include "radix2/poly.hpp"
#include "radix2/prime_field.hpp"
#include "radix2/transform.hpp"
