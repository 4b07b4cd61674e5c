#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mpacm/corpus.hpp"
#include "mpacm/depth.hpp"
#include "mpacm/hilbert.hpp"
#include "mpacm/points.hpp"
#include "mpacm/separators.hpp"

namespace mpacm {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Point-set JSON:  {"dims":[n1,...], "points":[[[c,...],[c,...]],...]}
// Coordinates are integers or "a/b" strings.
// ---------------------------------------------------------------------------

inline Rat parse_coordinate(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        Rat q;
        try {
            q = Rat(j.get<std::string>(), 10);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coordinate string: " + j.get<std::string>());
        }
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator in coordinate");
        q.canonicalize();
        return q;
    }
    throw std::invalid_argument("coordinate must be an integer or an \"a/b\" string");
}

inline json coordinate_to_json(const Rat& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p())
        return json(static_cast<long long>(q.get_num().get_si()));
    return json(q.get_str());
}

inline PointSet point_set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("points"))
        throw std::invalid_argument("point-set JSON needs \"dims\" and \"points\"");
    MultiDegree dims;
    for (const auto& d : j.at("dims")) {
        int n = d.get<int>();
        if (n < 1) throw std::invalid_argument("factor dimensions must be >= 1");
        dims.push_back(n);
    }
    std::vector<Point> pts;
    std::size_t idx = 0;
    for (const auto& pj : j.at("points")) {
        std::vector<std::vector<Rat>> coords;
        for (const auto& fj : pj) {
            std::vector<Rat> f;
            for (const auto& cj : fj) f.push_back(parse_coordinate(cj));
            coords.push_back(std::move(f));
        }
        try {
            pts.push_back(make_point(std::move(coords)));
        } catch (const std::exception& e) {
            throw std::invalid_argument("point " + std::to_string(idx) + ": " + e.what());
        }
        ++idx;
    }
    return make_point_set(std::move(dims), std::move(pts));
}

inline json point_set_to_json(const PointSet& x) {
    json j;
    j["dims"] = x.dims;
    json pts = json::array();
    for (const Point& p : x.points) {
        json pj = json::array();
        for (const auto& f : p.coords) {
            json fj = json::array();
            for (const Rat& c : f) fj.push_back(coordinate_to_json(c));
            pj.push_back(std::move(fj));
        }
        pts.push_back(std::move(pj));
    }
    j["points"] = std::move(pts);
    return j;
}

inline PointSet read_point_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument(path + ": malformed JSON: " + e.what());
    }
    return point_set_from_json(j);
}

inline void write_point_set(const std::string& path, const PointSet& x) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << point_set_to_json(x).dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Table renderings
// ---------------------------------------------------------------------------

namespace detail {

inline std::string render_matrix_text(const BoxTable<long long>& t, const std::string& title) {
    // two-factor tables as the familiar matrix with continuation markers
    std::size_t width = 1;
    for (long long v : t.values) width = std::max(width, std::to_string(v).size());
    std::ostringstream out;
    std::string indent(title.size() + 3, ' ');
    for (int i = 0; i <= t.box[0]; ++i) {
        out << (i == 0 ? title + " = " : indent);
        for (int j = 0; j <= t.box[1]; ++j) {
            std::string v = std::to_string(t.at({i, j}));
            out << std::string(width - v.size(), ' ') << v << (j == t.box[1] ? "" : " ");
        }
        out << " ⋯\n";
    }
    out << indent;
    for (int j = 0; j <= t.box[1]; ++j)
        out << std::string(width - 1, ' ') << "⋮" << (j == t.box[1] ? "" : " ");
    out << " ⋱\n";
    return out.str();
}

inline std::string render_list_text(const BoxTable<long long>& t, const std::string& title) {
    std::ostringstream out;
    out << title << ":\n";
    for_each_degree(t.box, [&](const MultiDegree& i) {
        out << "  (";
        for (std::size_t j = 0; j < i.size(); ++j) out << i[j] << (j + 1 < i.size() ? "," : "");
        out << ") " << t.at(i) << "\n";
    });
    return out.str();
}

}  // namespace detail

inline std::string render_table_text(const BoxTable<long long>& t, const std::string& title) {
    if (t.box.size() == 2) return detail::render_matrix_text(t, title);
    return detail::render_list_text(t, title);
}

inline std::string render_table_csv(const BoxTable<long long>& t) {
    std::ostringstream out;
    if (t.box.size() == 2) {
        for (int i = 0; i <= t.box[0]; ++i) {
            for (int j = 0; j <= t.box[1]; ++j) out << t.at({i, j}) << (j == t.box[1] ? "" : ",");
            out << "\n";
        }
        return out.str();
    }
    for_each_degree(t.box, [&](const MultiDegree& i) {
        for (int c : i) out << c << ",";
        out << t.at(i) << "\n";
    });
    return out.str();
}

inline json table_to_json(const BoxTable<long long>& t) {
    // nested arrays, outermost = factor 1
    std::function<json(MultiDegree&, std::size_t)> build = [&](MultiDegree& prefix,
                                                               std::size_t depth) -> json {
        json arr = json::array();
        if (depth == t.box.size() - 1) {
            for (int c = 0; c <= t.box[depth]; ++c) {
                prefix[depth] = c;
                arr.push_back(t.at(prefix));
            }
            return arr;
        }
        for (int c = 0; c <= t.box[depth]; ++c) {
            prefix[depth] = c;
            arr.push_back(build(prefix, depth + 1));
        }
        return arr;
    };
    MultiDegree prefix(t.box.size(), 0);
    json j;
    j["box"] = t.box;
    j["values"] = t.box.empty() ? json::array() : build(prefix, 0);
    return j;
}

inline json hilbert_table_to_json(const HilbertTable& h) {
    json j = table_to_json(h.table);
    j["npoints"] = h.npoints;
    j["stabilized"] = h.stabilized;
    return j;
}

inline json delta_table_to_json(const DeltaTable& d) {
    json j = table_to_json(d.table);
    j["npoints"] = d.npoints;
    return j;
}

// ---------------------------------------------------------------------------
// Report serialization
// ---------------------------------------------------------------------------

inline json rat_vector_to_json(const std::vector<Rat>& v) {
    json arr = json::array();
    for (const Rat& c : v) arr.push_back(coordinate_to_json(c));
    return arr;
}

inline json depth_report_to_json(const DepthReport& r) {
    json j;
    j["depth"] = r.depth;
    j["acm"] = r.acm;
    j["probable"] = r.probable;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["box"] = r.box;
    json seq = json::array();
    for (const LinearForm& f : r.sequence)
        seq.push_back({{"factor", f.factor}, {"coeffs", rat_vector_to_json(f.coeffs)}});
    j["sequence"] = std::move(seq);
    json ws = json::array();
    for (const DepthWitness& w : r.witnesses)
        ws.push_back({{"stage", w.stage},
                      {"trial", w.trial},
                      {"coeffs", rat_vector_to_json(w.coeffs)},
                      {"degree", w.degree},
                      {"kernel_dim", w.kernel_dim}});
    j["witnesses"] = std::move(ws);
    return j;
}

inline std::string acm_status_name(AcmStatus s) {
    switch (s) {
        case AcmStatus::ACM: return "ACM";
        case AcmStatus::NotACM: return "NotACM";
        default: return "ProbablyNotACM";
    }
}

inline json acm_report_to_json(const AcmReport& r) {
    json j;
    j["status"] = acm_status_name(r.status);
    j["certificate"] = r.certificate;
    if (r.depth) j["depth"] = depth_report_to_json(*r.depth);
    if (r.quick && r.quick->not_acm)
        j["quick_witness"] = {r.quick->witness.first, r.quick->witness.second};
    if (r.screen) {
        switch (r.screen->kind) {
            case DeltaScreen::Kind::Passes: j["delta_screen"] = "Passes"; break;
            case DeltaScreen::Kind::Negative:
                j["delta_screen"] = "Negative";
                j["delta_witness"] = r.screen->negative_at;
                break;
            case DeltaScreen::Kind::SupportViolation:
                j["delta_screen"] = "SupportViolation";
                j["delta_witness"] = {r.screen->support.first, r.screen->support.second};
                break;
        }
    }
    return j;
}

template <class F>
json separator_report_to_json(const PointSet& x, const std::vector<std::size_t>& which,
                              const std::vector<std::string>& labels, bool with_forms) {
    json arr = json::array();
    for (std::size_t p : which) {
        SeparatorDegreeSet s = separator_degrees<F>(x, p);
        json e;
        e["point"] = p;
        if (p < labels.size()) e["label"] = labels[p];
        e["degrees"] = s.degrees;
        if (with_forms) {
            json forms = json::array();
            for (const auto& alpha : s.degrees) {
                SeparatorForm<F> f = minimal_separator<F>(x, p, alpha);
                json fj;
                fj["degree"] = f.degree;
                json cs = json::array();
                for (const auto& c : f.coeffs) cs.push_back(to_string(c));
                fj["coeffs"] = std::move(cs);
                forms.push_back(std::move(fj));
            }
            e["separators"] = std::move(forms);
        }
        arr.push_back(std::move(e));
    }
    return arr;
}

inline json verify_report_to_json(const VerifyReport& r) {
    json j;
    j["example"] = r.name;
    j["pass"] = r.all_pass();
    json checks = json::array();
    for (const auto& c : r.checks) {
        json cj;
        cj["check"] = c.what;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace mpacm
