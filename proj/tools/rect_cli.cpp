// Command-line front end: enumerate, count, verify, render, oracle.
// Exit codes: 0 pass, 1 assertion failure, 2 usage or I/O error, 3 ceiling
// exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rect/charging.hpp"
#include "rect/enumerate.hpp"
#include "rect/io.hpp"
#include "rect/render.hpp"
#include "rect/stats.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAssert = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCeiling = 3;

struct CommonArgs {
    std::string perm;
    std::string points_file;
    int all_perms = -1;
    int max_n = 10;
    int oracle_max_n = 4;
    int workers = 1;
    std::string out;
    std::string cache_dir;
    long long seed = 0;  // reserved; verification has no randomized paths
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_all_perms) {
    cmd->add_option("--perm", args.perm, "permutation as whitespace-separated ranks");
    cmd->add_option("--points-file", args.points_file,
                    "JSON file with {\"perm\":[...]} or {\"points\":[[x,y],...]}");
    if (with_all_perms) {
        cmd->add_option("--all-perms", args.all_perms, "sweep every permutation of size N");
    }
    cmd->add_option("--max-n", args.max_n, "enumeration ceiling")->capture_default_str();
    cmd->add_option("--oracle-max-n", args.oracle_max_n, "oracle ceiling")
        ->capture_default_str();
    cmd->add_option("--workers", args.workers, "worker threads (0 = all cores)")
        ->capture_default_str();
    cmd->add_option("--out", args.out, "output path (default stdout)");
    cmd->add_option("--cache-dir", args.cache_dir,
                    "rc cache directory (default $RECT_CACHE_DIR)");
    cmd->add_option("--seed", args.seed, "reserved");
}

rect::PointConfig load_config(const CommonArgs& args) {
    if (!args.perm.empty() && !args.points_file.empty()) {
        throw std::invalid_argument("give exactly one of --perm and --points-file");
    }
    if (!args.perm.empty()) return rect::parse_point_input(args.perm);
    if (!args.points_file.empty()) {
        std::ifstream in(args.points_file);
        if (!in) throw std::invalid_argument("cannot read " + args.points_file);
        std::stringstream buf;
        buf << in.rdbuf();
        return rect::parse_point_input(buf.str());
    }
    throw std::invalid_argument("no input: give --perm or --points-file");
}

rect::EnumerateOptions enum_options(const CommonArgs& args) {
    rect::EnumerateOptions opts;
    opts.max_n = args.max_n;
    opts.workers = args.workers;
    return opts;
}

std::string cache_path(const CommonArgs& args) {
    std::string dir = args.cache_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("RECT_CACHE_DIR")) dir = env;
    }
    if (dir.empty()) return {};
    return dir + "/rc_cache.json";
}

int emit(const CommonArgs& args, const std::string& content) {
    if (args.out.empty()) {
        std::cout << content;
        return kExitPass;
    }
    if (!rect::write_file(args.out, content)) {
        std::cerr << "cannot write " << args.out << "\n";
        return kExitUsage;
    }
    return kExitPass;
}

std::optional<int> parse_d2_filter(const std::string& filter) {
    if (filter.empty()) return std::nullopt;
    if (filter.rfind("d2=", 0) != 0) {
        throw std::invalid_argument("unsupported filter (use d2=<count>): " + filter);
    }
    return std::stoi(filter.substr(3));
}

int cmd_enumerate(const CommonArgs& args, const std::string& filter, bool use_oracle) {
    rect::PointConfig cfg = load_config(args);
    rect::RectangulationSet set;
    if (use_oracle) {
        rect::OracleOptions opts;
        opts.max_n = args.oracle_max_n;
        set = rect::enumerate_oracle(cfg, opts);
    } else {
        set = rect::enumerate_backtracking(cfg, enum_options(args));
    }
    return emit(args, rect::jsonl_dump(set, parse_d2_filter(filter)));
}

int cmd_count(const CommonArgs& args, bool symmetry) {
    if (args.all_perms >= 0) {
        auto counts = rect::count_all_perms(args.all_perms, symmetry, enum_options(args));
        return emit(args, rect::counts_csv(counts, symmetry));
    }
    rect::PointConfig cfg = load_config(args);
    rect::RectangulationSet set = rect::enumerate_backtracking(cfg, enum_options(args));
    rect::PermCount pc;
    pc.perm = cfg.perm;
    pc.rc = set.rc();
    pc.d2_min = cfg.n() + 2;
    for (const rect::Rectangulation& r : set.members) {
        int d2 = 0;
        for (int a = 1; a <= cfg.n(); ++a) {
            const int d = rect::degree(r, a);
            pc.max_degree = std::max(pc.max_degree, d);
            if (d == 2) ++d2;
        }
        pc.d2_min = std::min(pc.d2_min, d2);
    }
    return emit(args, rect::counts_csv({pc}, false));
}

struct VerifySelection {
    std::vector<std::string> schemes;
    bool eq2 = false;
    bool recurrence = false;
    bool oracle_crosscheck = false;

    bool any() const { return !schemes.empty() || eq2 || recurrence || oracle_crosscheck; }
};

int cmd_verify(const CommonArgs& args, const VerifySelection& sel,
               const std::string& csv_path, const std::string& ledger_csv_path,
               const std::string& witness_dir) {
    rect::RcMemo memo;
    const std::string cache = cache_path(args);
    if (!cache.empty()) memo.load_file(cache);

    rect::VerifyConfigOptions vopts;
    vopts.enumerate = enum_options(args);
    vopts.oracle_max_n = args.oracle_max_n;
    if (sel.any()) {
        vopts.run_eq2 = sel.eq2;
        vopts.run_scheme_a = false;
        vopts.run_scheme_b = false;
        for (const std::string& s : sel.schemes) {
            if (s == "A" || s == "a") vopts.run_scheme_a = true;
            else if (s == "B" || s == "b") vopts.run_scheme_b = true;
            else throw std::invalid_argument("unknown scheme " + s + " (use A or B)");
        }
        vopts.oracle_crosscheck = sel.oracle_crosscheck;
    }

    std::vector<rect::BoundReport> reports;
    nlohmann::json out = nlohmann::json::object();
    bool all_pass = true;

    if (args.all_perms >= 0) {
        if (args.all_perms > args.max_n) {
            throw rect::CeilingExceeded("--all-perms exceeds --max-n");
        }
        for (const auto& perm : rect::all_perms(args.all_perms)) {
            rect::BoundReport rep = rect::verify_config(rect::PointConfig{perm}, memo, vopts);
            all_pass = all_pass && rep.pass;
            reports.push_back(std::move(rep));
        }
        if (sel.recurrence || !sel.any()) {
            nlohmann::json chain = nlohmann::json::array();
            std::vector<rect::PermCount> prev;
            for (int k = 1; k <= args.all_perms; ++k) {
                std::vector<rect::PermCount> cur =
                    rect::count_all_perms(k, false, enum_options(args));
                if (k >= 2) {
                    rect::RecurrenceReport rr = rect::verify_recurrence(prev, cur);
                    all_pass = all_pass && rr.chain_ok && rr.power_ok;
                    chain.push_back(nlohmann::json::parse(rect::recurrence_json(rr)));
                }
                prev = std::move(cur);
            }
            out["recurrence"] = chain;
        }
    } else {
        if (sel.recurrence) {
            throw std::invalid_argument("--recurrence needs --all-perms N");
        }
        rect::PointConfig cfg = load_config(args);
        rect::BoundReport rep = rect::verify_config(cfg, memo, vopts);
        all_pass = all_pass && rep.pass;

        if (!ledger_csv_path.empty()) {
            rect::RectangulationSet set =
                rect::enumerate_backtracking(cfg, vopts.enumerate);
            rect::ChargeLedger trimmed =
                rect::move_to_trimmed(rect::initial_charges(set), set,
                                      vopts.enumerate.workers);
            if (!rect::write_file(ledger_csv_path, rect::ledger_csv(trimmed, set))) {
                std::cerr << "cannot write " << ledger_csv_path << "\n";
                return kExitUsage;
            }
        }
        reports.push_back(std::move(rep));
    }

    // witness files for scheme-B violations, one per affected config
    for (const rect::BoundReport& rep : reports) {
        if (rep.scheme_b_violations.empty()) continue;
        rect::RectangulationSet set =
            rect::enumerate_backtracking(rect::PointConfig{rep.perm}, vopts.enumerate);
        std::string name = witness_dir + "/schemeB_witness";
        for (int v : rep.perm) name += "_" + std::to_string(v);
        name += ".json";
        rect::write_file(name, rect::scheme_b_witness_json(rep, set));
        std::cerr << "scheme B violation witnesses written to " << name << "\n";
    }

    nlohmann::json jreports = nlohmann::json::array();
    for (const rect::BoundReport& rep : reports) {
        jreports.push_back(nlohmann::json::parse(rect::bound_report_json(rep)));
    }
    out["reports"] = jreports;
    out["pass"] = all_pass;

    if (!csv_path.empty()) {
        if (!rect::write_file(csv_path, rect::sweep_csv(reports))) {
            std::cerr << "cannot write " << csv_path << "\n";
            return kExitUsage;
        }
    }
    if (!cache.empty()) memo.save_file(cache);

    const int code = emit(args, out.dump(2) + "\n");
    if (code != kExitPass) return code;
    return all_pass ? kExitPass : kExitAssert;
}

int cmd_render(const CommonArgs& args, int index, const std::string& key, int scale,
               bool no_labels) {
    rect::PointConfig cfg = load_config(args);
    rect::RectangulationSet set = rect::enumerate_backtracking(cfg, enum_options(args));
    int pick = -1;
    if (!key.empty()) {
        pick = set.find(key);
    } else if (index >= 0 && index < static_cast<int>(set.members.size())) {
        pick = index;
    }
    if (pick < 0) {
        std::cerr << "selector not found (rc=" << set.rc() << ")\n";
        return kExitUsage;
    }
    rect::RenderOptions ropts;
    ropts.scale = scale;
    ropts.labels = !no_labels;
    return emit(args, rect::render_svg(set.members[pick], ropts));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rectangulation enumeration and verification"};
    app.require_subcommand(1);

    CommonArgs args;

    std::string filter;
    CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate R(P) as JSONL");
    add_common(enumerate, args, false);
    enumerate->add_option("--filter", filter, "keep only members with d2=<count>");

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference enumeration");
    add_common(oracle, args, false);

    bool symmetry = false;
    CLI::App* count = app.add_subcommand("count", "rc counts as CSV");
    add_common(count, args, true);
    count->add_flag("--symmetry-reduce", symmetry, "one representative per symmetry orbit");

    VerifySelection sel;
    std::string csv_path, ledger_path, witness_dir = ".";
    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    add_common(verify, args, true);
    verify->add_option("--scheme", sel.schemes, "charging scheme to check (A or B)");
    verify->add_flag("--eq2", sel.eq2, "check the insertion-counting identity");
    verify->add_flag("--recurrence", sel.recurrence, "check rc(n) <= 17 rc(n-1) and 17^n");
    verify->add_flag("--oracle-crosscheck", sel.oracle_crosscheck,
                     "compare against the brute-force oracle");
    verify->add_option("--csv", csv_path, "write the sweep summary CSV here");
    verify->add_option("--ledger-csv", ledger_path,
                       "write the after-trim ledger CSV here (single config)");
    verify->add_option("--witness-dir", witness_dir, "directory for violation witnesses")
        ->capture_default_str();

    int index = -1;
    std::string key;
    int scale = 40;
    bool no_labels = false;
    CLI::App* render = app.add_subcommand("render", "render one rectangulation as SVG");
    add_common(render, args, false);
    render->add_option("--index", index, "member index in canonical-key order");
    render->add_option("--key", key, "canonical key of the member");
    render->add_option("--scale", scale, "pixels per unit")->capture_default_str();
    render->add_flag("--no-labels", no_labels, "omit point labels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(args, filter, false);
        if (oracle->parsed()) return cmd_enumerate(args, "", true);
        if (count->parsed()) return cmd_count(args, symmetry);
        if (verify->parsed()) return cmd_verify(args, sel, csv_path, ledger_path, witness_dir);
        if (render->parsed()) return cmd_render(args, index, key, scale, no_labels);
    } catch (const rect::CeilingExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitCeiling;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "verification invariant breached: " << e.what() << "\n";
        return kExitAssert;
    }
    return kExitUsage;
}
