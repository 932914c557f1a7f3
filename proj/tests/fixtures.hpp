#pragma once

#include "spanseg/samples.hpp"

namespace fixtures = spanseg::samples;
