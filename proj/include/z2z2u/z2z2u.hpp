#pragma once

#include "additive_code.hpp"
#include "binary_code.hpp"
#include "bit_vector.hpp"
#include "catalog.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "mixed_vector.hpp"
#include "rings.hpp"
#include "structure.hpp"
#include "weight_enumerator.hpp"
