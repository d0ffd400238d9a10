#pragma once

#include "bentlab/error.hpp"
#include "bentlab/field.hpp"
#include "bentlab/io.hpp"
#include "bentlab/linpoly.hpp"
#include "bentlab/oracle.hpp"
#include "bentlab/triples.hpp"
#include "bentlab/walsh.hpp"

namespace bentlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bentlab
