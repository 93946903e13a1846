#include "check_report.hpp"

namespace homjj {

void CheckReport::record(std::vector<std::size_t> tuple, Vec residual) {
    ++tuples_checked;
    if (vec_is_zero(residual)) return;
    pass = false;
    if (witnesses.size() < kMaxWitnesses) {
        witnesses.push_back(Witness{std::move(tuple), std::move(residual)});
    }
}

void CheckReport::absorb(const CheckReport& sub, const std::string& label) {
    tuples_checked += sub.tuples_checked;
    notes.push_back(label + ": " + (sub.pass ? "PASS" : "FAIL"));
    if (!sub.pass) pass = false;
    for (const auto& w : sub.witnesses) {
        if (witnesses.size() >= kMaxWitnesses) break;
        witnesses.push_back(w);
    }
}

std::string CheckReport::text() const {
    std::string out;
    out += "property: " + property + "\n";
    out += "verdict: " + std::string(pass ? "PASS" : "FAIL") + "\n";
    out += "tuples checked: " + std::to_string(tuples_checked) + "\n";
    for (const auto& n : notes) out += "note: " + n + "\n";
    for (const auto& w : witnesses) {
        std::string t = "(";
        for (std::size_t i = 0; i < w.tuple.size(); ++i) {
            if (i) t += ",";
            t += std::to_string(w.tuple[i]);
        }
        t += ")";
        out += "witness " + t + ": residual " + vec_str(w.residual) + "\n";
    }
    return out;
}

}  // namespace homjj
