#ifndef MVONE_ERRORS_HPP
#define MVONE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace mvone {

// Mathematically detected negatives. These are expected outcomes on valid
// inputs, not bugs; the CLI maps them to exit code 2.

struct ZeroMixedVolume : std::runtime_error {
    std::vector<int> witness;  // indices of a subtuple with dim(sum) < size
    explicit ZeroMixedVolume(std::vector<int> w)
        : std::runtime_error("mixed volume is zero"), witness(std::move(w)) {}
};

struct NotMixedVolumeOne : std::runtime_error {
    std::string stage;
    explicit NotMixedVolumeOne(std::string s)
        : std::runtime_error("mixed volume is not 1 (detected at: " + s + ")"),
          stage(std::move(s)) {}
};

struct MixedVolumeExceedsOne : std::runtime_error {
    std::string count;  // decimal value of the mixed volume, when cheaply available
    explicit MixedVolumeExceedsOne(std::string c)
        : std::runtime_error("mixed volume exceeds 1 (value: " + c + ")"), count(std::move(c)) {}
};

struct NotEssential : std::runtime_error {
    NotEssential() : std::runtime_error("tuple is not essential") {}
};

struct NoLift : std::runtime_error {
    NoLift() : std::runtime_error("no fiber translations assemble a volume 1 simplex") {}
};

struct SingularBlock : std::runtime_error {
    SingularBlock() : std::runtime_error("linear block is singular (non-generic coefficients)") {}
};

struct ZeroCoordinate : std::runtime_error {
    ZeroCoordinate() : std::runtime_error("solution leaves the torus (non-generic coefficients)") {}
};

}  // namespace mvone

#endif
