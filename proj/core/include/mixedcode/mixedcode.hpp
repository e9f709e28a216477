#pragma once

#include "mixedcode/cyclic.hpp"
#include "mixedcode/enumerate.hpp"
#include "mixedcode/errors.hpp"
#include "mixedcode/io.hpp"
#include "mixedcode/matrix.hpp"
#include "mixedcode/poly.hpp"
#include "mixedcode/ring.hpp"
