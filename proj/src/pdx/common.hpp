#ifndef PDX_COMMON_HPP
#define PDX_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdx {

// Subsets of a model's state sequence are characteristic bitmasks: bit i
// stands for states[i].  Dense set functions are tables indexed by mask.
using StateSet = std::uint32_t;

// Dense tables have 2^|S| entries; beyond this we refuse rather than thrash.
inline constexpr std::size_t kMaxDenseStates = 20;

// Permutation enumeration is factorial; the credal oracle stops here.
inline constexpr std::size_t kMaxOracleStates = 8;

// Truth-table equivalence enumerates 4^k assignments.
inline constexpr std::size_t kMaxEquivalenceAtoms = 10;

inline StateSet full_set(std::size_t n) {
    return static_cast<StateSet>((std::uint64_t{1} << n) - 1);
}

inline StateSet complement(StateSet x, std::size_t n) {
    return static_cast<StateSet>(~x) & full_set(n);
}

// Global comparison tolerance. All definedness gates ("> 0"), boundary
// checks and clamping use the same value. Default 1e-9.
double epsilon();
void set_epsilon(double eps);

enum class ErrorCode {
    Parse,           // formula syntax or file schema
    UndefinedUpdate, // a conditioning definedness gate failed
    TotalConflict,   // Dempster-Shafer combination with empty-intersection support only
    Domain,          // unknown atom/state, size caps, invalid arguments
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : Error(ErrorCode::Parse,
                "syntax error at offset " + std::to_string(offset) + ": " + message),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Renders a subset mask as "{s1,s3}" using the universe's state names.
std::string set_to_string(StateSet x, const std::vector<std::string>& universe);

} // namespace pdx

#endif // PDX_COMMON_HPP
