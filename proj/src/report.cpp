#include "cpngenus/report.hpp"

#include "cpngenus/version.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace cpngenus {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json json_header(const std::string& command) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["engine_version"] = kEngineVersion;
    j["command"] = command;
    return j;
}

std::string opt_integer(const std::optional<Integer>& v) {
    return v.has_value() ? v->str() : "-";
}

// Column separator for the candidate tables.
std::string istr() { return "  "; }

std::string reasons_string(const std::vector<EliminationReason>& reasons) {
    if (reasons.empty()) {
        return "-";
    }
    std::string out;
    for (size_t i = 0; i < reasons.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += to_string(reasons[i]);
    }
    return out;
}

ordered_json candidate_json(const CandidateOutcome& c) {
    ordered_json j;
    j["k"] = c.k.str();
    if (c.discriminant.has_value()) {
        j["discriminant"] = c.discriminant->str();
        j["discriminant_is_square"] = c.discriminant_square.value_or(false);
    }
    j["c2"] = c.c2.has_value() ? ordered_json(c.c2->str()) : ordered_json(nullptr);
    if (c.yau.has_value()) {
        ordered_json y;
        y["status"] = to_string(c.yau->status);
        y["lhs"] = to_string(c.yau->lhs);
        y["rhs"] = to_string(c.yau->rhs);
        j["yau"] = std::move(y);
    } else {
        j["yau"] = nullptr;
    }
    j["todd"] = c.todd.has_value() ? ordered_json(to_string(*c.todd)) : ordered_json(nullptr);
    j["status"] = to_string(c.status);
    ordered_json rs = ordered_json::array();
    for (const auto& r : c.reasons) {
        rs.push_back(to_string(r));
    }
    j["reasons"] = std::move(rs);
    return j;
}

}  // namespace

ReportDocument render_classification(const ClassificationReport& rep, const std::string& command) {
    const bool cp4_table = !rep.candidates.empty() && rep.candidates.front().discriminant.has_value();

    ordered_json j = json_header(command);
    j["inputs"] = {{"n", rep.n},
                   {"mode", to_string(rep.mode)},
                   {"simply_connected", rep.simply_connected}};
    ordered_json trace = ordered_json::array();
    for (const auto& t : rep.trace) {
        trace.push_back({{"stage", t.stage}, {"detail", t.detail}});
    }
    j["trace"] = std::move(trace);
    ordered_json pre = ordered_json::array();
    for (const auto& p : rep.prefiltered) {
        pre.push_back({{"k", p.k.str()}, {"reason", to_string(p.reason)}});
    }
    j["prefiltered"] = std::move(pre);
    ordered_json cands = ordered_json::array();
    for (const auto& c : rep.candidates) {
        cands.push_back(candidate_json(c));
    }
    j["candidates"] = std::move(cands);
    ordered_json verdict;
    verdict["kind"] = to_string(rep.final_verdict.kind);
    verdict["k"] = rep.final_verdict.k.has_value() ? ordered_json(rep.final_verdict.k->str())
                                                   : ordered_json(nullptr);
    j["verdict"] = std::move(verdict);

    std::ostringstream out;
    out << "command: " << command << "\n";
    out << "engine: " << kEngineVersion << "\n";
    out << "inputs: n = " << rep.n << ", mode = " << to_string(rep.mode)
        << ", simply_connected = " << (rep.simply_connected ? "true" : "false") << "\n";
    out << "trace:\n";
    for (const auto& t : rep.trace) {
        out << "  [" << t.stage << "] " << t.detail << "\n";
    }
    if (!rep.prefiltered.empty()) {
        out << "prefiltered:\n";
        for (const auto& p : rep.prefiltered) {
            out << "  k = " << p.k.str() << " (" << to_string(p.reason) << ")\n";
        }
    }
    out << "candidates:\n";
    if (cp4_table) {
        out << "  " << std::setw(4) << "k" <<istr() << std::setw(12) << "7k^4+2025" << istr()
            << std::setw(7) << "square" << istr() << std::setw(5) << "c2" << istr() << std::setw(15)
            << "yau" << istr() << std::setw(5) << "todd" << istr() << std::setw(11) << "status"
            << istr() << "reasons\n";
    } else {
        out << "  " << std::setw(4) << "k" << istr() << std::setw(8) << "c2" << istr()
            << std::setw(15) << "yau" << istr() << std::setw(5) << "todd" << istr() << std::setw(11)
            << "status" << istr() << "reasons\n";
    }
    for (const auto& c : rep.candidates) {
        out << "  " << std::setw(4) << c.k.str();
        if (cp4_table) {
            out << istr() << std::setw(12) << opt_integer(c.discriminant) << istr() << std::setw(7)
                << (c.discriminant_square.value_or(false) ? "yes" : "no");
        }
        out << istr() << std::setw(cp4_table ? 5 : 8) << opt_integer(c.c2);
        out << istr() << std::setw(15) << (c.yau.has_value() ? to_string(c.yau->status) : "-");
        out << istr() << std::setw(5) << (c.todd.has_value() ? to_string(*c.todd) : "-");
        out << istr() << std::setw(11) << to_string(c.status);
        out << istr() << reasons_string(c.reasons) << "\n";
    }
    out << "verdict: " << to_string(rep.final_verdict.kind);
    if (rep.final_verdict.k.has_value()) {
        out << " (k = " << rep.final_verdict.k->str() << ")";
    } else {
        out << " (survivors:";
        const auto survivors = rep.surviving_k();
        if (survivors.empty()) {
            out << " none";
        } else {
            for (const auto& k : survivors) {
                out << " " << k.str();
            }
        }
        out << ")";
    }
    out << "\n";

    return ReportDocument{out.str(), std::move(j)};
}

namespace {

template <typename R>
ordered_json poly_terms_json(const ClassPoly<R>& poly);

template <>
ordered_json poly_terms_json(const ClassPolyQ& poly) {
    std::vector<std::pair<Exponents, Rational>> items(poly.terms().begin(), poly.terms().end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        const unsigned wa = monomial_weight(a.first);
        const unsigned wb = monomial_weight(b.first);
        if (wa != wb) {
            return wa < wb;
        }
        return b.first < a.first;
    });
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : items) {
        ordered_json t;
        t["exponents"] = e;
        t["coefficient"] = ordered_json::array({to_string(c)});
        terms.push_back(std::move(t));
    }
    return terms;
}

template <>
ordered_json poly_terms_json(const ClassPolyY& poly) {
    std::vector<std::pair<Exponents, ParamPoly>> items(poly.terms().begin(), poly.terms().end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        const unsigned wa = monomial_weight(a.first);
        const unsigned wb = monomial_weight(b.first);
        if (wa != wb) {
            return wa < wb;
        }
        return b.first < a.first;
    });
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : items) {
        ordered_json t;
        t["exponents"] = e;
        ordered_json coeffs = ordered_json::array();
        for (int d = 0; d <= std::max(c.degree(), 0); ++d) {
            coeffs.push_back(to_string(c.coeff(static_cast<unsigned>(d))));
        }
        t["coefficient"] = std::move(coeffs);
        terms.push_back(std::move(t));
    }
    return terms;
}

}  // namespace

ReportDocument render_genus_table(const std::string& genus_name, unsigned max_degree,
                                  const std::string& command) {
    if (max_degree > 8) {
        throw std::invalid_argument("genus-table: max degree is 8, got " +
                                    std::to_string(max_degree));
    }

    ordered_json j = json_header(command);
    j["inputs"] = {{"genus", genus_name}, {"max_degree", max_degree}};
    std::ostringstream out;
    out << "command: " << command << "\n";

    const auto emit = [&](VarKind kind, const std::string& coeff_kind, auto&& kpoly_at) {
        j["variables"] = kind == VarKind::chern ? "chern" : "pontrjagin";
        j["coefficient_kind"] = coeff_kind;
        ordered_json table = ordered_json::array();
        out << "genus-table: " << genus_name << " up to degree " << max_degree << " ("
            << (kind == VarKind::chern ? "chern" : "pontrjagin") << " variables)\n";
        for (unsigned d = 0; d <= max_degree; ++d) {
            const auto poly = kpoly_at(d);
            ordered_json row;
            row["degree"] = d;
            row["text"] = poly.to_string();
            row["terms"] = poly_terms_json(poly);
            table.push_back(std::move(row));
            out << genus_name << "_" << d << " = " << poly.to_string() << "\n";
        }
        j["table"] = std::move(table);
    };

    if (genus_name == "todd") {
        emit(VarKind::chern, "rational", [](unsigned d) { return todd_genus().k_polynomial(d); });
    } else if (genus_name == "ahat") {
        emit(VarKind::pontrjagin, "rational",
             [](unsigned d) { return a_hat_genus().k_polynomial(d); });
    } else if (genus_name == "L") {
        emit(VarKind::pontrjagin, "rational", [](unsigned d) { return l_genus().k_polynomial(d); });
    } else if (genus_name == "chi-y") {
        emit(VarKind::chern, "y_polynomial",
             [](unsigned d) { return chi_y_genus_object().k_polynomial(d); });
    } else {
        throw std::invalid_argument("genus-table: unknown genus '" + genus_name +
                                    "' (valid: todd, ahat, L, chi-y)");
    }

    return ReportDocument{out.str(), std::move(j)};
}

}  // namespace cpngenus
