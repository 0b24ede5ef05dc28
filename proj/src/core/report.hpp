#ifndef GFM_CORE_REPORT_HPP
#define GFM_CORE_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "extension.hpp"

namespace gfm {

/// One named verification check inside a report.
struct Check {
    std::string name;
    bool pass = false;
    std::string witness; // rendered counterexample or summary; may be empty
};

/// Machine-readable outcome of one CLI command. Serialization sorts keys and
/// is byte-stable for fixed parameters and seed, except for elapsed_ms.
class Report {
  public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    void set_param(const std::string& key, nlohmann::json value);
    void add_check(const std::string& name, bool pass, const std::string& witness = "");
    void add_warning(const std::string& text) { warnings_.push_back(text); }
    void set_detail(nlohmann::json detail) { detail_ = std::move(detail); }
    void set_elapsed_ms(std::int64_t ms) { elapsed_ms_ = ms; }

    const std::string& command() const { return command_; }
    const std::vector<Check>& checks() const { return checks_; }
    bool passed() const;

    nlohmann::json to_json() const;
    std::string to_text() const;

  private:
    std::string command_;
    nlohmann::json parameters_ = nlohmann::json::object();
    std::vector<Check> checks_;
    std::vector<std::string> warnings_;
    nlohmann::json detail_;
    std::int64_t elapsed_ms_ = 0;
};

/// Certifies non-splitting: exhaustive candidate search at the twist y/x for
/// alpha <= alpha_max, plus full walkthroughs for alpha in {0, 1}, t = y^alpha.
Report run_theorem(FieldId field, std::int64_t alpha_max);

/// Randomized roundtrip and degree-preservation checks for the central
/// isomorphism and every structure map.
Report run_roundtrip(FieldId field, std::int64_t degree, std::int64_t precision,
                     std::uint64_t trials, std::uint64_t seed);

/// Cross-validates normal-form vanishing in E against the membership test.
Report run_zero_fuzz(FieldId field, std::uint64_t trials, std::uint64_t seed);

/// Stage-by-stage trace of the defect computation for one candidate.
Report run_walkthrough(FieldId field, std::int64_t alpha, const Poly& t);

} // namespace gfm

#endif
