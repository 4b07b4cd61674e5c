// Command-line front end: load point-set JSON files, run the analyses, and
// render tables or JSON reports.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mpacm/corpus.hpp"
#include "mpacm/depth.hpp"
#include "mpacm/hilbert.hpp"
#include "mpacm/io.hpp"
#include "mpacm/points.hpp"
#include "mpacm/separators.hpp"

namespace {

using namespace mpacm;

struct Options {
    std::string command;
    std::string file;
    std::string field = "rat";
    std::uint64_t prime = 65521;
    std::uint64_t seed = kDefaultSeed;
    unsigned trials = 5;
    std::string box;
    std::string format = "text";
    bool assert_acm = false;
    // separators
    std::string point;
    bool forms = false;
    // ferrers
    std::string lambda;
    std::string target;
    // embed
    std::string dims;
    std::string slots;
    // example
    std::string example_name;
    bool verify = false;
};

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("bad ") + what + " list: " + s);
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string("empty ") + what + " list");
    return out;
}

HilbertTableOptions table_options(const Options& o) {
    HilbertTableOptions topt;
    if (!o.box.empty()) topt.box = parse_int_list(o.box, "box");
    return topt;
}

void print_degree(std::ostream& os, const MultiDegree& d) {
    os << "(";
    for (std::size_t j = 0; j < d.size(); ++j) os << d[j] << (j + 1 < d.size() ? "," : "");
    os << ")";
}

/// Point index from either a number or a catalog label (matched by comparing
/// the loaded set against every catalog example).
std::size_t resolve_point(const PointSet& x, const std::string& spec) {
    bool numeric = !spec.empty() && spec.find_first_not_of("0123456789") == std::string::npos;
    if (numeric) {
        unsigned long v = std::stoul(spec);
        if (v >= x.size()) throw std::invalid_argument("point index out of range: " + spec);
        return v;
    }
    for (const auto& name : example_names()) {
        PaperExample ex = build_example(name);
        if (ex.points.dims != x.dims || ex.points.points != x.points) continue;
        for (std::size_t t = 0; t < ex.labels.size(); ++t)
            if (ex.labels[t] == spec) return t;
    }
    throw std::invalid_argument("cannot resolve point \"" + spec + "\"");
}

template <class F>
int run(const Options& o) {
    const std::string& fmt = o.format;

    if (o.command == "hilbert" || o.command == "delta") {
        PointSet x = read_point_set(o.file);
        HilbertTable h = hilbert_table<F>(x, table_options(o));
        if (o.command == "hilbert") {
            if (fmt == "json") std::cout << hilbert_table_to_json(h).dump(2) << "\n";
            else if (fmt == "csv") std::cout << render_table_csv(h.table);
            else std::cout << render_table_text(h.table, "H_X");
        } else {
            DeltaTable d = delta_table(h);
            if (fmt == "json") std::cout << delta_table_to_json(d).dump(2) << "\n";
            else if (fmt == "csv") std::cout << render_table_csv(d.table);
            else std::cout << render_table_text(d.table, "DH_X");
        }
        return 0;
    }

    if (o.command == "depth") {
        PointSet x = read_point_set(o.file);
        DepthReport r = compute_depth<F>(x, o.trials, o.seed);
        if (fmt == "json") {
            std::cout << depth_report_to_json(r).dump(2) << "\n";
        } else {
            std::cout << "depth = " << r.depth << (r.acm ? " (ACM)" : "")
                      << (r.probable ? " (probable)" : "") << "\n";
            for (const auto& w : r.witnesses) {
                std::cout << "stage " << w.stage << " trial " << w.trial << ": kernel dim "
                          << w.kernel_dim << " at ";
                print_degree(std::cout, w.degree);
                std::cout << "\n";
            }
        }
        return 0;
    }

    if (o.command == "acm") {
        PointSet x = read_point_set(o.file);
        AcmReport r = is_acm<F>(x, o.trials, o.seed);
        if (fmt == "json") {
            std::cout << acm_report_to_json(r).dump(2) << "\n";
        } else {
            std::cout << acm_status_name(r.status) << ": " << r.certificate << "\n";
        }
        return o.assert_acm && r.status != AcmStatus::ACM ? 1 : 0;
    }

    if (o.command == "star") {
        PointSet x = read_point_set(o.file);
        StarResult s = has_property_star(x);
        if (fmt == "json") {
            json j;
            j["satisfied"] = s.satisfied;
            if (!s.satisfied) j["witness"] = {s.witness.first, s.witness.second};
            std::cout << j.dump(2) << "\n";
        } else if (s.satisfied) {
            std::cout << "satisfied\n";
        } else {
            std::cout << "not satisfied; witness points " << s.witness.first << " and "
                      << s.witness.second << "\n";
        }
        return 0;
    }

    if (o.command == "sx") {
        PointSet x = read_point_set(o.file);
        SXPoset s = sx_poset(x);
        if (fmt == "json") {
            json j;
            j["rows"] = s.rows;
            j["totally_ordered"] = s.totally_ordered;
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& row : s.rows) {
                for (std::size_t j = 0; j < row.size(); ++j)
                    std::cout << row[j] << (j + 1 < row.size() ? " " : "");
                std::cout << "\n";
            }
            std::cout << (s.totally_ordered ? "totally ordered" : "not totally ordered") << "\n";
        }
        return 0;
    }

    if (o.command == "separators") {
        PointSet x = read_point_set(o.file);
        std::vector<std::size_t> which;
        if (!o.point.empty()) {
            which.push_back(resolve_point(x, o.point));
        } else {
            for (std::size_t p = 0; p < x.size(); ++p) which.push_back(p);
        }
        json rep = separator_report_to_json<F>(x, which, {}, o.forms);
        if (fmt == "json") {
            std::cout << rep.dump(2) << "\n";
        } else {
            for (const auto& e : rep) {
                std::cout << "point " << e["point"].get<std::size_t>() << ": degrees";
                for (const auto& d : e["degrees"]) {
                    MultiDegree md = d.get<MultiDegree>();
                    std::cout << " ";
                    print_degree(std::cout, md);
                }
                std::cout << "\n";
            }
        }
        return 0;
    }

    if (o.command == "ferrers") {
        std::vector<int> lambda = parse_int_list(o.lambda, "lambda");
        std::vector<int> target = parse_int_list(o.target, "target");
        if (target.size() != 2 || target[0] != 1)
            throw std::invalid_argument("target must be 1,n");
        int n = target[1];
        std::vector<std::vector<Rat>> ps, qs;
        for (long i = 1; i <= static_cast<long>(lambda.size()); ++i) ps.push_back({Rat(1), Rat(i)});
        for (long j = 1; j <= lambda[0]; ++j) {
            std::vector<Rat> q{Rat(1)};
            Rat pw(1);
            for (int t = 0; t < n; ++t) {
                pw *= Rat(j);
                q.push_back(pw);  // rational normal curve keeps the points generic
            }
            qs.push_back(std::move(q));
        }
        PointSet x = ferrers_point_set(lambda, ps, qs);
        std::cout << point_set_to_json(x).dump(2) << "\n";
        return 0;
    }

    if (o.command == "embed") {
        PointSet x = read_point_set(o.file);
        std::vector<int> dims = parse_int_list(o.dims, "dims");
        std::vector<int> slots = parse_int_list(o.slots, "slots");
        if (slots.size() != 2) throw std::invalid_argument("slots must be i,j");
        PointSet y = embed_points(x, dims, slots[0], slots[1]);
        std::cout << point_set_to_json(y).dump(2) << "\n";
        return 0;
    }

    if (o.command == "example") {
        if (o.verify) {
            VerifyReport rep = verify_example<F>(o.example_name, o.trials, o.seed);
            if (fmt == "json") {
                std::cout << verify_report_to_json(rep).dump(2) << "\n";
            } else {
                PaperExample ex = build_example(o.example_name);
                HilbertTable h = hilbert_table<F>(ex.points);
                std::cout << render_table_text(h.table, "H_X");
                for (const auto& c : rep.checks)
                    std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.what
                              << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
                std::cout << (rep.all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
            }
            return rep.all_pass() ? 0 : 1;
        }
        PaperExample ex = build_example(o.example_name);
        std::cout << point_set_to_json(ex.points).dump(2) << "\n";
        return 0;
    }

    throw std::invalid_argument("unknown command: " + o.command);
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    if (const char* env = std::getenv("MPACM_FIELD")) o.field = env;

    CLI::App app{"exact multigraded Hilbert-function and ACM analysis for multiprojective points"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--field", o.field, "scalar field: rat | fp")
        ->check(CLI::IsMember({"rat", "fp"}));
    app.add_option("--prime", o.prime, "modulus for --field fp (odd prime)");
    app.add_option("--seed", o.seed, "random seed for depth search");
    app.add_option("--trials", o.trials, "trials per depth stage");
    app.add_option("--box", o.box, "fixed box override, e.g. 4,4");
    app.add_option("--format", o.format, "output: text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto file_cmd = [&](const std::string& name, const std::string& desc) {
        CLI::App* c = app.add_subcommand(name, desc);
        c->add_option("file", o.file, "point-set JSON file")->required();
        return c;
    };
    file_cmd("hilbert", "multigraded Hilbert function table");
    file_cmd("delta", "first difference of the Hilbert function");
    file_cmd("depth", "depth via randomized regular-sequence search");
    CLI::App* acm = file_cmd("acm", "ACM verdict with certificate");
    acm->add_flag("--assert-acm", o.assert_acm, "exit 1 unless the verdict is ACM");
    file_cmd("star", "combinatorial completion property (two factors)");
    file_cmd("sx", "incidence poset of a two-factor set");
    CLI::App* sep = file_cmd("separators", "minimal separator degrees");
    sep->add_option("--point", o.point, "point index or catalog label");
    sep->add_flag("--forms", o.forms, "include separator coefficient vectors");

    CLI::App* fer = app.add_subcommand("ferrers", "partition-shaped point set in P^1 x P^n");
    fer->add_option("--lambda", o.lambda, "non-increasing partition, e.g. 4,4,3")->required();
    fer->add_option("--target", o.target, "target space as 1,n")->required();

    CLI::App* emb = file_cmd("embed", "embed a P^2 x P^2 set into a larger product");
    emb->add_option("--dims", o.dims, "target factor dimensions, e.g. 1,2,2")->required();
    emb->add_option("--slots", o.slots, "1-based factor slots receiving the two factors")
        ->required();

    CLI::App* exa = app.add_subcommand("example", "build or verify a catalog example");
    exa->add_option("name", o.example_name, "catalog example name")->required();
    exa->add_flag("--verify", o.verify, "recompute and diff all expected quantities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    o.command = app.get_subcommands().front()->get_name();

    try {
        if (o.field == "fp") {
            mpacm::Fp::set_modulus(o.prime);
            return run<mpacm::Fp>(o);
        }
        return run<mpacm::Rat>(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
