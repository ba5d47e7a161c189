#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "divfree/freeness.hpp"
#include "divfree/parser.hpp"
#include "divfree/resolution.hpp"

namespace divfree {

inline constexpr const char* kEngineVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

// Reports are nlohmann ordered JSON trees: key order is insertion order, all
// polynomials are canonical grevlex strings, so emission is byte-deterministic
// for a fixed input, seed and engine version.
using Report = nlohmann::ordered_json;

namespace reportdetail {

inline Report polys_to_json(const std::vector<Polynomial>& polys) {
    Report arr = Report::array();
    for (const auto& p : polys) arr.push_back(p.to_string());
    return arr;
}

inline Report point_to_json(const std::vector<Rational>& point) {
    Report arr = Report::array();
    for (const auto& c : point) arr.push_back(to_string(c));
    return arr;
}

inline Report syzygy_to_json(const Syzygy& s) {
    Report out;
    out["components"] = polys_to_json(s.components);
    out["degree"] = s.degree;
    out["regular"] = s.regular;
    return out;
}

inline Report matrix_to_json(const SyzygyMatrix& m) {
    Report cols = Report::array();
    for (std::size_t i = 0; i < m.columns.size(); ++i) {
        Report col;
        col["degree"] = m.column_degrees[i];
        col["components"] = polys_to_json(m.columns[i].components);
        cols.push_back(std::move(col));
    }
    return cols;
}

inline const char* search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::NoneCertified: return "none (certified)";
        case SearchStatus::BudgetExhausted: return "not found (budget exhausted)";
    }
    return "?";
}

inline Report search_to_json(const SearchOutcome& s) {
    Report out;
    out["status"] = search_status_name(s.status);
    out["trials"] = s.trials_used;
    if (s.witness)
        out["witness"] = syzygy_to_json(*s.witness);
    else
        out["witness"] = nullptr;
    if (!s.certificate.empty()) out["certificate"] = s.certificate;
    return out;
}

inline Report locus_to_json(const SingularLocus& locus) {
    Report out;
    out["degree"] = locus.degree;
    out["alpha"] = locus.alpha;
    Report pts = Report::array();
    for (const auto& p : locus.points) pts.push_back(point_to_json(p));
    out["singular_points"] = std::move(pts);
    out["radical_ideal"] = polys_to_json(locus.radical_ideal);
    return out;
}

inline Report bounds_to_json(const BoundsReport& b) {
    Report out;
    if (b.regular_degree_bound) {
        Report r;
        r["d"] = b.regular_degree_bound->d;
        r["radical_degree"] = b.regular_degree_bound->radical_degree;
        r["bound"] = b.regular_degree_bound->bound;
        r["satisfied"] = b.regular_degree_bound->satisfied;
        out["regular_degree_bound"] = std::move(r);
    } else {
        out["regular_degree_bound"] = nullptr;
    }
    out["regular_degree_bound_refused_d1"] = b.regular_degree_bound_refused_d1;
    if (b.non_freeness_threshold) {
        Report r;
        r["radical_degree"] = b.non_freeness_threshold->radical_degree;
        r["threshold"] = b.non_freeness_threshold->threshold;
        r["triggered"] = b.non_freeness_threshold->triggered;
        r["verdict_not_free"] = b.non_freeness_threshold->verdict_not_free;
        out["non_freeness_threshold"] = std::move(r);
    }
    if (b.alpha_beta_bound) {
        Report r;
        r["alpha"] = b.alpha_beta_bound->alpha;
        r["beta"] = b.alpha_beta_bound->beta;
        r["satisfied"] = b.alpha_beta_bound->satisfied;
        r["attained"] = b.alpha_beta_bound->attained;
        out["alpha_beta_bound"] = std::move(r);
    }
    return out;
}

}  // namespace reportdetail

inline Report report_header(const std::string& command, const InputDocument& doc,
                            unsigned long seed) {
    Report out;
    out["schema_version"] = kReportSchemaVersion;
    out["engine_version"] = kEngineVersion;
    out["command"] = command;
    out["seed"] = seed;
    Report input;
    Report vars = Report::array();
    for (const auto& n : doc.context->names()) vars.push_back(n);
    input["variables"] = std::move(vars);
    switch (doc.kind) {
        case InputDocument::Kind::Divisor:
            input["divisor"] = doc.body.front().to_string();
            break;
        case InputDocument::Kind::Arrangement:
            input["lines"] = reportdetail::polys_to_json(doc.body);
            break;
        case InputDocument::Kind::Ideal:
            input["ideal"] = reportdetail::polys_to_json(doc.body);
            break;
    }
    out["input"] = std::move(input);
    return out;
}

inline Report freeness_to_json(const FreenessReport& r) {
    Report out;
    out["degree"] = r.divisor_degree;
    out["jacobian_height"] = r.jacobian_height;
    out["smooth"] = r.smooth;
    out["is_free"] = r.is_free;
    out["projective_dimension"] = r.projective_dimension;
    if (r.exponents) {
        Report exps = Report::array();
        for (unsigned e : *r.exponents) exps.push_back(e);
        out["exponents"] = std::move(exps);
    } else {
        out["exponents"] = nullptr;
    }
    Report degs = Report::array();
    for (unsigned d : r.syzygy_matrix.column_degrees) degs.push_back(d);
    out["syzygy_degrees"] = std::move(degs);
    out["syzygy_matrix"] = reportdetail::matrix_to_json(r.syzygy_matrix);
    if (r.quasihomogeneity) {
        Report q;
        q["tjurina_total"] = r.quasihomogeneity->tjurina_total;
        q["milnor_total"] = r.quasihomogeneity->milnor_total;
        q["quasihomogeneous"] = r.quasihomogeneity->quasihomogeneous;
        out["quasihomogeneity"] = std::move(q);
    } else {
        out["quasihomogeneity"] = nullptr;
    }
    out["regular_syzygy"] = reportdetail::search_to_json(r.regular_syzygy_search);
    if (r.locus) {
        out["singular_locus"] = reportdetail::locus_to_json(*r.locus);
        out["radical_degree"] = r.locus->degree;
        out["near_pencil"] = r.near_pencil;
    }
    if (r.bounds) out["bounds"] = reportdetail::bounds_to_json(*r.bounds);
    return out;
}

inline Report resolution_to_json(const GradedResolution& res) {
    Report out;
    BettiTable bt = betti_table(res);
    out["length"] = res.length();
    out["projective_dimension"] = bt.projective_dimension();
    Report table = Report::array();
    for (std::size_t i = 0; i < bt.shifts.size(); ++i) {
        Report row;
        row["homological_degree"] = i;
        Report shifts = Report::array();
        for (unsigned s : bt.shifts[i]) shifts.push_back(s);
        row["shifts"] = std::move(shifts);
        table.push_back(std::move(row));
    }
    out["betti"] = std::move(table);
    out["minimal"] = resolution_is_minimal(res);
    Report maps = Report::array();
    for (const auto& step : res.maps) {
        Report cols = Report::array();
        for (const auto& col : step) cols.push_back(reportdetail::polys_to_json(col.components));
        maps.push_back(std::move(cols));
    }
    out["maps"] = std::move(maps);
    return out;
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

namespace reportdetail {

inline void render_text(const Report& node, std::ostream& os, const std::string& indent) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() &&
                                      (value.front().is_object() || value.front().is_array()))) {
                os << indent << key << ":\n";
                render_text(value, os, indent + "  ");
            } else {
                os << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                   << "\n";
            }
        }
    } else if (node.is_array()) {
        std::size_t i = 0;
        for (const auto& value : node) {
            if (value.is_object() || value.is_array()) {
                os << indent << "- [" << i << "]\n";
                render_text(value, os, indent + "  ");
            } else {
                os << indent << "- " << (value.is_string() ? value.get<std::string>() : value.dump())
                   << "\n";
            }
            ++i;
        }
    }
}

}  // namespace reportdetail

enum class ReportFormat { Json, Text };

inline std::string emit_report(const Report& report, ReportFormat format) {
    if (format == ReportFormat::Json) return report.dump(2) + "\n";
    std::ostringstream os;
    reportdetail::render_text(report, os, "");
    return os.str();
}

}  // namespace divfree
