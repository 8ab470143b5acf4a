#pragma once

#include <supercong/exact.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace supercong {

using ParamMap = std::map<std::string, Int>;

enum class ClaimKind {
    Congruence, // lhs ≡ rhs (mod p^e)
    ValGe,      // measured valuation >= required bound
    ValEq,      // measured valuation == required valuation
    ExactEq,    // exact rational equality
};

struct CongruenceReport {
    std::string statement;
    ParamMap params;
    ClaimKind kind = ClaimKind::Congruence;

    std::optional<Int> modulus;
    std::optional<Int> lhs, rhs; // residues
    std::optional<Valuation> valuation_measured;
    std::optional<Valuation> valuation_required;
    std::optional<std::string> lhs_exact, rhs_exact; // exact-equality claims

    bool pass = false;
    bool skipped = false;
    std::string reason;  // set when skipped
    std::string note;    // vacuous modulus, boundary flags
    std::optional<std::string> witness;

    nlohmann::json to_json() const;
    std::string to_csv() const;
    static std::string csv_header();
};

namespace detail {

inline nlohmann::json json_int(const Int& x) {
    if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
    return x.get_str();
}

inline std::string csv_escape(std::string s) {
    for (auto& c : s) {
        if (c == ',') c = ';';
        if (c == '\n') c = ' ';
    }
    return s;
}

} // namespace detail

inline nlohmann::json CongruenceReport::to_json() const {
    nlohmann::json j;
    j["statement"] = statement;
    nlohmann::json ps = nlohmann::json::object();
    for (const auto& [k, v] : params) ps[k] = detail::json_int(v);
    j["params"] = ps;
    if (modulus) j["modulus"] = detail::json_int(*modulus);
    if (lhs) j["lhs"] = detail::json_int(*lhs);
    if (rhs) j["rhs"] = detail::json_int(*rhs);
    if (valuation_measured) {
        if (valuation_measured->is_infinite()) j["valuation_measured"] = "inf";
        else j["valuation_measured"] = valuation_measured->value();
    }
    if (valuation_required) {
        if (valuation_required->is_infinite()) j["valuation_required"] = "inf";
        else j["valuation_required"] = valuation_required->value();
    }
    if (lhs_exact) j["lhs_exact"] = *lhs_exact;
    if (rhs_exact) j["rhs_exact"] = *rhs_exact;
    j["pass"] = pass;
    j["skipped"] = skipped;
    if (!reason.empty()) j["reason"] = reason;
    if (!note.empty()) j["note"] = note;
    if (witness) j["witness"] = *witness;
    return j;
}

inline std::string CongruenceReport::csv_header() {
    return "statement,params,modulus,lhs,rhs,valuation_measured,valuation_required,"
           "pass,skipped,reason,note,witness";
}

inline std::string CongruenceReport::to_csv() const {
    std::string ps;
    for (const auto& [k, v] : params) {
        if (!ps.empty()) ps += ';';
        ps += k + "=" + v.get_str();
    }
    auto opt_int = [](const std::optional<Int>& x) { return x ? x->get_str() : std::string(); };
    auto opt_val = [](const std::optional<Valuation>& x) {
        return x ? x->to_string() : std::string();
    };
    std::string row = statement + "," + ps + "," + opt_int(modulus) + "," + opt_int(lhs) + "," +
                      opt_int(rhs) + "," + opt_val(valuation_measured) + "," +
                      opt_val(valuation_required) + "," + (pass ? "true" : "false") + "," +
                      (skipped ? "true" : "false") + "," + detail::csv_escape(reason) + "," +
                      detail::csv_escape(note) + "," +
                      detail::csv_escape(witness ? *witness : std::string());
    return row;
}

} // namespace supercong
