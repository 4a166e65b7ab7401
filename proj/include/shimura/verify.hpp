#pragma once

#include "shimura/interpbc.hpp"
#include "shimura/serialize.hpp"

#include <string>
#include <vector>

namespace shimura {

enum class Property { Vanishing, Normalization, EvenSymmetry, Expansion, ResEval, All };

std::string property_name(Property p);
/// Throws ParseError on an unknown name.
Property parse_property(std::string_view name);

enum class Status { Pass, Fail, Degenerate };

std::string status_name(Status s);

struct CheckRecord {
    std::string property;
    std::string check;
    int p = 0;
    int q = 0;
    std::string mu;
    std::string lambda;
    std::string mode;
    Status status = Status::Pass;
    std::string value;   // exact rational
    std::string detail;  // free-form context, e.g. the evaluation point
};

struct VerifySpec {
    Property property = Property::All;
    std::vector<HookParams> hps;
    int max_size = 4;
    int window = 2;
};

/// (1,1), (2,1), (1,2), (2,2).
std::vector<HookParams> standard_hook_params();

struct Report {
    VerifySpec spec;
    std::vector<CheckRecord> records;
    Json findings = Json::object();

    [[nodiscard]] std::size_t count(Status s) const;
    /// 0 all pass, 1 any failure, 3 degenerate fallback without failures.
    [[nodiscard]] int exit_code() const;
};

/// Runs the exact checks. Failures are data in the report, never exceptions;
/// independent J_μ constructions may run concurrently but records are
/// always emitted in canonical order.
Report verify_properties(const VerifySpec& spec);

/// k̃_μ, t_μ, e_μ against k_μ and the (−1/2)^{|μ|} / (−1/4)^{|μ|} coefficients.
Json constants_ledger(const std::vector<HookParams>& hps, int max_size);

Json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

} // namespace shimura
