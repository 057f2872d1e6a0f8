#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "w2/annihilator.hpp"
#include "w2/derivation.hpp"
#include "w2/oracle.hpp"
#include "w2/parse.hpp"
#include "w2/selftest.hpp"
#include "w2/structure.hpp"

namespace w2cli {

using json = nlohmann::ordered_json;

/**
 * Outcome of one command invocation.  The payload is the full structured
 * document {command, inputs, result, diagnostics}; the text renderer
 * derives its output from the same document, so the two formats can never
 * disagree on substance.
 */
struct CommandResult {
    std::string status = "ok";
    json payload;
    std::vector<std::string> diagnostics;
    int exit_code = 0;
};

namespace detail {

inline CommandResult run(const std::string& command, json inputs,
                         const std::function<json()>& body) {
    CommandResult out;
    json result;
    try {
        result = body();
    } catch (const w2::parse_error& e) {
        out.status = "error";
        out.exit_code = 2;
        out.diagnostics.push_back(e.what());
    } catch (const w2::domain_error& e) {
        out.status = "error";
        out.exit_code = 1;
        out.diagnostics.push_back(e.what());
    } catch (const w2::internal_error& e) {
        out.status = "error";
        out.exit_code = 3;
        out.diagnostics.push_back(e.what());
    }
    out.payload = json{{"command", command},
                       {"inputs", std::move(inputs)},
                       {"result", std::move(result)},
                       {"diagnostics", out.diagnostics}};
    return out;
}

inline json derivation_json(const w2::Derivation& d) {
    return json{{"P", w2::format(d.P)}, {"Q", w2::format(d.Q)}};
}

inline json rational_list(const std::vector<w2::Rat>& coeffs) {
    json out = json::array();
    for (const auto& c : coeffs) out.push_back(c.get_str());
    return out;
}

}  // namespace detail

inline CommandResult cmd_annihilator(const std::string& num, const std::string& den) {
    return detail::run("annihilator", json{{"num", num}, {"den", den}}, [&]() -> json {
        const auto gen = w2::generator(w2::parse_rational(num, den));
        return json{{"delta", detail::derivation_json(gen.delta)},
                    {"content", w2::format(gen.content)},
                    {"source", detail::derivation_json(gen.source)}};
    });
}

inline CommandResult cmd_apply(const std::string& P, const std::string& Q, const std::string& num,
                               const std::string& den) {
    return detail::run("apply", json{{"P", P}, {"Q", Q}, {"num", num}, {"den", den}},
                       [&]() -> json {
                           const w2::Derivation d{w2::parse_polynomial(P), w2::parse_polynomial(Q)};
                           const auto v = w2::apply(d, w2::parse_rational(num, den));
                           return json{{"num", w2::format(v.num())}, {"den", w2::format(v.den())}};
                       });
}

inline CommandResult cmd_bracket(const std::string& P1, const std::string& Q1,
                                 const std::string& P2, const std::string& Q2) {
    return detail::run("bracket", json{{"P1", P1}, {"Q1", Q1}, {"P2", P2}, {"Q2", Q2}},
                       [&]() -> json {
                           const w2::Derivation a{w2::parse_polynomial(P1), w2::parse_polynomial(Q1)};
                           const w2::Derivation b{w2::parse_polynomial(P2), w2::parse_polynomial(Q2)};
                           return detail::derivation_json(w2::bracket(a, b));
                       });
}

inline CommandResult cmd_membership(const std::string& P, const std::string& Q,
                                    const std::string& num, const std::string& den) {
    return detail::run("membership", json{{"P", P}, {"Q", Q}, {"num", num}, {"den", den}},
                       [&]() -> json {
                           const w2::Derivation d{w2::parse_polynomial(P), w2::parse_polynomial(Q)};
                           const auto h = w2::membership(d, w2::parse_rational(num, den));
                           json out{{"member", h.has_value()}};
                           if (h) out["multiplier"] = w2::format(*h);
                           return out;
                       });
}

inline CommandResult cmd_decompose_pfree(const std::string& f, const std::string& p) {
    return detail::run("decompose-pfree", json{{"f", f}, {"p", p}}, [&]() -> json {
        const auto r = w2::p_content(w2::parse_polynomial(f), w2::parse_polynomial(p));
        return json{{"pfree", w2::format(r.pfree)}, {"cofactor", w2::format(r.cofactor, "t")}};
    });
}

inline CommandResult cmd_decompose_pqfree(const std::string& f, const std::string& p,
                                          const std::string& q) {
    return detail::run("decompose-pqfree", json{{"f", f}, {"p", p}, {"q", q}}, [&]() -> json {
        const auto r =
            w2::pq_content(w2::parse_polynomial(f), w2::parse_polynomial(p), w2::parse_polynomial(q));
        return json{{"pqfree", w2::format(r.pqfree)},
                    {"form_degree", r.m},
                    {"form_coeffs", detail::rational_list(r.form_coeffs)}};
    });
}

inline CommandResult cmd_centralizer(const std::string& f, const std::string& num,
                                     const std::string& den, const std::string& p,
                                     const std::optional<std::string>& q, unsigned degree,
                                     bool verify) {
    json inputs{{"f", f}, {"num", num}, {"den", den}, {"p", p}};
    if (q) inputs["q"] = *q;
    inputs["degree"] = degree;
    inputs["verify"] = verify;
    return detail::run("centralizer", std::move(inputs), [&]() -> json {
        const w2::Polynomial fp = w2::parse_polynomial(f);
        const auto u = w2::parse_rational(num, den);
        const w2::Polynomial pp = w2::parse_polynomial(p);
        std::optional<w2::Polynomial> qp;
        if (q) qp = w2::parse_polynomial(*q);

        const w2::CentralizerDescription desc =
            qp ? w2::centralizer_rational_case(fp, pp, *qp, u) : w2::centralizer_poly_case(fp, pp, u);
        json out{{"kind", desc.kind == w2::CentralizerKind::rational_case ? "rational" : "polynomial"},
                 {"pfree_part", w2::format(desc.pfree_part)},
                 {"p", w2::format(desc.p)}};
        if (desc.q) out["q"] = w2::format(*desc.q);
        if (const auto dim = desc.dimension()) {
            out["form_degree"] = desc.form_degree;
            out["dimension"] = *dim;
        } else {
            out["dimension"] = "infinite";
        }
        out["delta"] = detail::derivation_json(desc.delta);
        out["degree_bound"] = degree;
        json basis = json::array();
        for (const auto& g : desc.multipliers_up_to(degree)) basis.push_back(w2::format(g));
        out["basis"] = basis;
        if (verify) {
            const auto agreement = w2::verify_centralizer(fp, u, pp, qp, degree);
            out["verified"] = agreement.agree;
            out["oracle_dimension"] = agreement.oracle_dimension;
        }
        return out;
    });
}

inline CommandResult cmd_verify_generative(const std::string& num, const std::string& den,
                                           const std::string& cnum, const std::string& cden) {
    return detail::run("verify-generative",
                       json{{"num", num}, {"den", den}, {"cnum", cnum}, {"cden", cden}},
                       [&]() -> json {
                           const auto r = w2::verify_generative(w2::parse_rational(num, den),
                                                                w2::parse_rational(cnum, cden));
                           json out{{"accepted", r.accepted}};
                           if (!r.diagnostic.empty()) out["diagnostic"] = r.diagnostic;
                           if (r.univariate_witness)
                               out["witness"] = json{{"type", "univariate"},
                                                     {"F", w2::format(*r.univariate_witness, "t")}};
                           if (r.form_witness_num)
                               out["witness"] = json{{"type", "form-quotient"},
                                                     {"degree", r.form_degree},
                                                     {"F", detail::rational_list(*r.form_witness_num)},
                                                     {"G", detail::rational_list(*r.form_witness_den)}};
                           return out;
                       });
}

inline CommandResult cmd_oracle_nullspace(const std::string& num, const std::string& den,
                                          unsigned degree) {
    return detail::run("oracle nullspace", json{{"num", num}, {"den", den}, {"degree", degree}},
                       [&]() -> json {
                           const auto o =
                               w2::annihilator_nullspace(w2::parse_rational(num, den), degree);
                           json basis = json::array();
                           for (const auto& d : o.basis) basis.push_back(detail::derivation_json(d));
                           return json{{"degree_bound", o.degree_bound},
                                       {"dimension", o.basis.size()},
                                       {"ambient_dimension", o.ambient_dimension},
                                       {"basis", basis}};
                       });
}

inline CommandResult cmd_oracle_rank1(const std::string& num, const std::string& den,
                                      unsigned degree) {
    return detail::run("oracle rank1", json{{"num", num}, {"den", den}, {"degree", degree}},
                       [&]() -> json {
                           const auto r = w2::verify_rank1(w2::parse_rational(num, den), degree);
                           return json{{"ok", r.passed},
                                       {"degree_bound", r.degree_bound},
                                       {"expected_dimension", r.expected_dimension},
                                       {"actual_dimension", r.actual_dimension},
                                       {"violations", r.violations.size()}};
                       });
}

inline CommandResult cmd_oracle_centralizer(const std::string& f, const std::string& num,
                                            const std::string& den, unsigned degree) {
    return detail::run("oracle centralizer",
                       json{{"f", f}, {"num", num}, {"den", den}, {"degree", degree}},
                       [&]() -> json {
                           const auto o = w2::centralizer_nullspace(
                               w2::parse_polynomial(f), w2::parse_rational(num, den), degree);
                           json basis = json::array();
                           for (const auto& g : o.multipliers) basis.push_back(w2::format(g));
                           return json{{"degree_bound", o.degree_bound},
                                       {"dimension", o.multipliers.size()},
                                       {"delta", detail::derivation_json(o.delta)},
                                       {"basis", basis}};
                       });
}

inline CommandResult cmd_oracle_lemma4(const std::string& p, const std::string& q, unsigned degree) {
    return detail::run("oracle lemma4", json{{"p", p}, {"q", q}, {"degree", degree}},
                       [&]() -> json {
                           const bool ok = w2::joint_annihilator_trivial(
                               w2::parse_polynomial(p), w2::parse_polynomial(q), degree);
                           return json{{"ok", ok}, {"degree_bound", degree}};
                       });
}

inline CommandResult cmd_selftest(std::uint64_t seed, unsigned trials) {
    return detail::run("selftest", json{{"seed", seed}, {"trials", trials}}, [&]() -> json {
        const auto reports = w2::run_selftests(seed, trials);
        json suites = json::array();
        for (const auto& r : reports) {
            json s{{"suite", r.suite}, {"trials", r.trials}, {"failures", r.failures}};
            if (!r.counterexamples.empty()) s["counterexamples"] = r.counterexamples;
            suites.push_back(std::move(s));
        }
        return json{{"suites", suites}, {"all_passed", w2::all_passed(reports)}};
    });
}

namespace detail {

inline void render_text_line(std::string& out, const std::string& key, const json& value,
                             const std::string& indent) {
    if (value.is_object()) {
        out += indent + key + ":\n";
        for (const auto& [k, v] : value.items()) render_text_line(out, k, v, indent + "  ");
    } else if (value.is_array()) {
        const bool scalars = std::all_of(value.begin(), value.end(),
                                         [](const json& v) { return !v.is_structured(); });
        if (scalars) {
            std::string joined;
            for (const auto& v : value) {
                if (!joined.empty()) joined += ", ";
                joined += v.is_string() ? v.get<std::string>() : v.dump();
            }
            out += indent + key + ": [" + joined + "]\n";
        } else {
            out += indent + key + ":\n";
            for (const auto& v : value) out += indent + "  - " + v.dump() + "\n";
        }
    } else if (value.is_string()) {
        out += indent + key + ": " + value.get<std::string>() + "\n";
    } else {
        out += indent + key + ": " + value.dump() + "\n";
    }
}

}  // namespace detail

/// Render a result in the requested format ("text" or "json").
inline std::string render(const CommandResult& r, const std::string& format) {
    if (format == "json") return r.payload.dump(2) + "\n";
    std::string out;
    out += "command: " + r.payload.at("command").get<std::string>() + "\n";
    out += "status: " + r.status + "\n";
    if (!r.payload.at("result").is_null())
        for (const auto& [k, v] : r.payload.at("result").items())
            detail::render_text_line(out, k, v, "");
    for (const auto& d : r.diagnostics) out += "error: " + d + "\n";
    return out;
}

}  // namespace w2cli
