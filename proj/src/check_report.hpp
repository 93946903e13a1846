#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace homjj {

// One failing basis tuple together with its nonzero residual vector.
struct Witness {
    std::vector<std::size_t> tuple;  // 1-based basis indices
    Vec residual;
};

// Verdict of a property checker. FAIL if and only if witnesses is nonempty;
// witnesses hold the lexicographically first failing tuples, capped at 10.
struct CheckReport {
    std::string property;
    bool pass = true;
    std::vector<Witness> witnesses;
    std::size_t tuples_checked = 0;
    std::vector<std::string> notes;

    static constexpr std::size_t kMaxWitnesses = 10;

    void record(std::vector<std::size_t> tuple, Vec residual);
    void absorb(const CheckReport& sub, const std::string& label);
    void note(const std::string& line) { notes.push_back(line); }

    std::string text() const;
};

}  // namespace homjj
