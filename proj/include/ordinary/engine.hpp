#pragma once

namespace ordinary {

// Fast paths are candidate generators whose output is always re-verified
// exactly; brute paths are the reference implementations.
enum class Engine { fast, brute };

}  // namespace ordinary
