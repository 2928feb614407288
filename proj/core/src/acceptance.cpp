#include "gramlab/acceptance.hpp"
namespace gramlab {
bool AcceptanceResult::all_pass() const { return false; }
std::string AcceptanceResult::verdict_table() const { return ""; }
std::string AcceptanceResult::csv_summary() const { return ""; }
AcceptanceResult run_acceptance(std::uint64_t seed, int) { AcceptanceResult r; r.seed = seed; return r; }
}
