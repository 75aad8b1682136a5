#pragma once

#include "patcon/matrix.hpp"
#include "patcon/pattern.hpp"
#include "patcon/naive.hpp"
#include "patcon/fast.hpp"
#include "patcon/extremal.hpp"
#include "patcon/bench.hpp"
