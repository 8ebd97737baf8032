#pragma once

#include <fourfa/bytes.hpp>

namespace fourfa {

/// Compares every byte regardless of where the first difference is. Lengths
/// are treated as public: unequal lengths return false immediately.
bool constant_time_equal(ByteView a, ByteView b);

}
