#include "lorentz/audit.hpp"

namespace lorentz {

std::string format_report(const AxiomReport& report) {
    std::string out;
    out += "model: " + report.model + " (seed " + std::to_string(report.seed) + ")\n";
    for (const auto& c : report.checks) {
        out += "  ";
        out += c.passed ? "PASS" : "FAIL";
        out += "  " + c.name + "  [" + std::to_string(c.checked);
        out += c.exhaustive ? " tuples, exhaustive]" : " tuples, sampled]";
        if (!c.passed) out += "\n        witness: " + c.witness;
        out += "\n";
    }
    return out;
}

}  // namespace lorentz
