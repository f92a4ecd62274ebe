#include "negfont/cli.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "negfont/invariants.hpp"
#include "negfont/spectra.hpp"
#include "negfont/state_io.hpp"
#include "negfont/transpose.hpp"

namespace negfont {

using nlohmann::ordered_json;

namespace {

// Usage problems detected after argument parsing (flag/n mismatch, bad
// numeric fields).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_json(std::ostream& os, const ordered_json& v) {
    switch (v.type()) {
        case ordered_json::value_t::object: {
            os << '{';
            bool first = true;
            for (const auto& [key, item] : v.items()) {
                os << (first ? "" : ", ") << ordered_json(key).dump() << ": ";
                write_json(os, item);
                first = false;
            }
            os << '}';
            break;
        }
        case ordered_json::value_t::array: {
            os << '[';
            bool first = true;
            for (const auto& item : v) {
                os << (first ? "" : ", ");
                write_json(os, item);
                first = false;
            }
            os << ']';
            break;
        }
        case ordered_json::value_t::number_float:
            os << format_double(v.get<double>());
            break;
        default:
            os << v.dump();
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

double parse_real(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw UsageError("not a finite number: '" + s + "'");
    return v;
}

long long parse_integer(const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
    return v;
}

char qubit_letter(int q) { return static_cast<char>('A' + q - 1); }

int qubit_for_state(const std::string& text, const PureState& state) {
    int q = 0;
    try {
        q = parse_qubit(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (q > state.n_qubits()) {
        throw UsageError("qubit " + text + " does not exist in a " + std::to_string(state.n_qubits()) + "-qubit state");
    }
    return q;
}

PureState load_state(const std::string& path, std::ostream& err) {
    PureState s = read_state_file(path);
    if (s.was_renormalized()) {
        err << "negfont: warning: " << path << " was renormalized (|norm - 1| = " << s.normalization_correction()
            << ")\n";
    }
    return s;
}

void require_n(const PureState& s, int n, const std::string& what) {
    if (s.n_qubits() != n) {
        throw UsageError(what + " needs a " + std::to_string(n) + "-qubit state, got " + std::to_string(s.n_qubits()));
    }
}

// ----------------------------------------------------------------- gen

struct GenArgs {
    std::string kind;
    int n = 0;
    std::uint64_t seed = 0;
    std::string out_path;
};

PureState generate(const GenArgs& a) {
    const bool need_n = a.kind != "cluster4";
    if (need_n && a.n == 0) throw UsageError("gen " + a.kind + " needs a qubit count");
    try {
        if (a.kind == "ghz") return ghz(a.n);
        if (a.kind == "w") return w_state(a.n);
        if (a.kind == "cluster4") {
            if (a.n != 0 && a.n != 4) throw UsageError("cluster4 is a 4-qubit state");
            return cluster4();
        }
        if (a.kind == "product") return random_product_state(a.n, a.seed);
        if (a.kind == "random") return random_state(a.n, a.seed);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown state kind '" + a.kind + "'");
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
    const PureState s = generate(a);
    if (a.out_path.empty() || a.out_path == "-") {
        out << format_state_json(s);
    } else {
        write_state_file(s, a.out_path);
    }
    return kExitOk;
}

// ------------------------------------------------------------- measure

struct MeasureArgs {
    std::string state_path;
    bool tangle3 = false;
    bool tangle4 = false;
    bool all = false;
    std::vector<std::string> negativity;
    std::vector<std::string> kway;
    std::vector<std::string> fonts;
};

ordered_json fonts_json(const PureState& s, int p) {
    ordered_json list = ordered_json::array();
    for (const auto& f : enumerate_fonts(s, p)) {
        list.push_back({{"i", f.location.i.str()},
                        {"j", f.location.j.str()},
                        {"k", f.location.k},
                        {"det_re", f.det.real()},
                        {"det_im", f.det.imag()},
                        {"lambda_minus", f.lambda_minus},
                        {"negative", f.negative}});
    }
    return list;
}

int cmd_measure(const MeasureArgs& a, std::ostream& out, std::ostream& err) {
    if (!a.all && !a.tangle3 && !a.tangle4 && a.negativity.empty() && a.kway.empty() && a.fonts.empty()) {
        throw UsageError("measure: no measure requested");
    }
    const PureState s = load_state(a.state_path, err);
    const int n = s.n_qubits();

    // Validate every request before computing anything.
    if (a.tangle3) require_n(s, 3, "--tangle3");
    if (a.tangle4) require_n(s, 4, "--tangle4");
    std::vector<int> neg_qubits;
    for (const auto& p : a.negativity) neg_qubits.push_back(qubit_for_state(p, s));
    std::vector<std::pair<int, int>> kway_requests;
    for (const auto& spec : a.kway) {
        const auto parts = split(spec, ',');
        if (parts.size() != 2) throw UsageError("--kway expects <p,K>, got '" + spec + "'");
        const int p = qubit_for_state(parts[0], s);
        const auto k = parse_integer(parts[1]);
        if (k < 2 || k > n) throw UsageError("--kway: K must lie in [2, " + std::to_string(n) + "]");
        kway_requests.emplace_back(p, static_cast<int>(k));
    }
    std::vector<int> font_qubits;
    for (const auto& p : a.fonts) font_qubits.push_back(qubit_for_state(p, s));

    MeasureReport report;
    report.descriptor = a.state_path;
    auto& v = report.values;
    if (a.tangle3 || (a.all && n == 3)) v["tangle3"] = three_tangle(s);
    if (a.tangle4 || (a.all && n == 4)) v["tangle4"] = four_tangle(s);
    if (a.all && n == 4) v["four_invariant_abs"] = std::abs(four_invariant(s));
    if (a.all) {
        for (int p = 1; p <= n; ++p) neg_qubits.push_back(p);
        for (int p = 1; p <= n; ++p)
            for (int k = 2; k <= n; ++k) kway_requests.emplace_back(p, k);
    }
    for (int p : neg_qubits) v[std::string("negativity_") + qubit_letter(p)] = global_negativity(s, p);
    for (const auto& [p, k] : kway_requests) {
        v[std::string("kway_negativity_") + qubit_letter(p) + "_" + std::to_string(k)] = kway_negativity(s, p, k);
    }
    for (int p : font_qubits) v[std::string("fonts_") + qubit_letter(p)] = fonts_json(s, p);

    err << "negfont: measured " << report.descriptor << " (n=" << n << ")\n";
    out << format_report(v);
    return kExitOk;
}

// --------------------------------------------------------------- check

struct CheckArgs {
    std::string state_path;
    bool decomposition = false;
    bool product_identity = false;
    std::string covariance;
    std::string lu_sweep;
};

ordered_json covariance_json(const std::vector<CovarianceReport>& reports) {
    ordered_json obj = ordered_json::object();
    for (const auto& r : reports) {
        ordered_json candidates = ordered_json::object();
        for (const auto& c : r.candidates) candidates[c.label] = c.residual;
        obj[r.relation] = {{"residual", r.residual}, {"prefactor", r.prefactor_label}, {"candidates", candidates}};
    }
    return obj;
}

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
    if (!a.decomposition && !a.product_identity && a.covariance.empty() && a.lu_sweep.empty()) {
        throw UsageError("check: no check requested");
    }
    const PureState s = load_state(a.state_path, err);
    const int n = s.n_qubits();

    if (a.decomposition && n < 2) throw UsageError("--decomposition needs at least two qubits");
    if (a.product_identity) require_n(s, 3, "--product-identity");

    int cov_qubit = 0;
    cplx cov_param{};
    if (!a.covariance.empty()) {
        const auto parts = split(a.covariance, ',');
        if (parts.size() != 2 && parts.size() != 3) {
            throw UsageError("--covariance expects <qubit,re[,im]>, got '" + a.covariance + "'");
        }
        if (n != 3 && n != 4) throw UsageError("--covariance needs a 3- or 4-qubit state");
        cov_qubit = qubit_for_state(parts[0], s);
        if (n == 3 && cov_qubit != 2) throw UsageError("--covariance on three qubits is defined for qubit B");
        cov_param = {parse_real(parts[1]), parts.size() == 3 ? parse_real(parts[2]) : 0.0};
    }

    int trials = 0;
    std::uint64_t seed = 0;
    if (!a.lu_sweep.empty()) {
        const auto parts = split(a.lu_sweep, ',');
        if (parts.size() != 2) throw UsageError("--lu-sweep expects <trials,seed>, got '" + a.lu_sweep + "'");
        const auto t = parse_integer(parts[0]);
        const auto sd = parse_integer(parts[1]);
        if (t < 0 || t > 10'000'000) throw UsageError("--lu-sweep: trial count out of range");
        if (sd < 0) throw UsageError("--lu-sweep: seed must be non-negative");
        if (n != 3 && n != 4) throw UsageError("--lu-sweep needs a 3- or 4-qubit state");
        trials = static_cast<int>(t);
        seed = static_cast<std::uint64_t>(sd);
    }

    MeasureReport report;
    report.descriptor = a.state_path;
    auto& v = report.values;
    double worst = 0.0;
    if (a.decomposition) {
        const DensityOperator rho(s);
        double r = 0.0;
        for (int p = 1; p <= n; ++p) r = std::max(r, decomposition_residual(rho, p));
        v["decomposition"] = r;
        worst = std::max(worst, r);
    }
    if (a.product_identity) {
        const auto d = three_fonts(s);
        const double identity = product_identity_residual(d);
        const double alternate = std::abs(three_tangle(d) - three_tangle_alternate(d));
        v["product_identity"] = {{"identity", identity}, {"alternate_form", alternate}};
        worst = std::max({worst, identity, alternate});
    }
    if (cov_qubit != 0) {
        const auto reports = n == 3 ? covariance_check_3(s, cov_param)
                                    : covariance_check_4(s, qubit_letter(cov_qubit), cov_param);
        v["covariance"] = covariance_json(reports);
        worst = std::max(worst, max_residual(reports));
    }
    if (!a.lu_sweep.empty()) {
        report.seed = seed;
        report.trials = trials;
        const double dev = lu_invariance_sweep(s, trials, seed);
        v["lu_sweep"] = dev;
        worst = std::max(worst, dev);
    }

    err << "negfont: checked " << report.descriptor << " (n=" << n << "), max residual " << worst << "\n";
    out << format_report(v);
    return worst <= kCheckThreshold ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::string format_report(const ordered_json& report) {
    std::ostringstream os;
    write_json(os, report);
    os << '\n';
    return os.str();
}

int parse_qubit(const std::string& text) {
    if (text.size() == 1 && text[0] >= 'A' && text[0] <= 'J') return text[0] - 'A' + 1;
    if (text.size() == 1 && text[0] >= 'a' && text[0] <= 'j') return text[0] - 'a' + 1;
    if (!text.empty() && text.size() <= 2 && std::all_of(text.begin(), text.end(), ::isdigit)) {
        const int q = std::stoi(text);
        if (q >= 1 && q <= kDefaultMaxQubits) return q;
    }
    throw std::invalid_argument("invalid qubit '" + text + "' (use A-J or 1-10)");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entanglement measures from negativity fonts of N-qubit pure states", "negfont"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Write a canonical or random state file");
    gen->add_option("kind", gen_args.kind, "ghz | w | cluster4 | product | random")->required();
    gen->add_option("n", gen_args.n, "Number of qubits");
    gen->add_option("--seed", gen_args.seed, "Seed for random and product states");
    gen->add_option("-o,--out", gen_args.out_path, "Output path (default: standard output)");

    MeasureArgs m_args;
    auto* measure = app.add_subcommand("measure", "Compute entanglement measures of a state file");
    measure->add_option("state", m_args.state_path, "State file (JSON)")->required();
    measure->add_flag("--tangle3", m_args.tangle3, "Three-tangle (n = 3)");
    measure->add_flag("--tangle4", m_args.tangle4, "Four-tangle (n = 4)");
    measure->add_option("--negativity", m_args.negativity, "Global negativity on qubit p")->allow_extra_args(false);
    measure->add_option("--kway", m_args.kway, "K-way negativity, as p,K")->allow_extra_args(false);
    measure->add_option("--fonts", m_args.fonts, "Negativity fonts on qubit p")->allow_extra_args(false);
    measure->add_flag("--all", m_args.all, "Every scalar measure valid for the state");

    CheckArgs c_args;
    auto* check = app.add_subcommand("check", "Verify identities and invariance relations");
    check->add_option("state", c_args.state_path, "State file (JSON)")->required();
    check->add_flag("--decomposition", c_args.decomposition, "Global = sum of K-way transposes, every qubit");
    check->add_flag("--product-identity", c_args.product_identity, "Three-qubit determinant product identity");
    check->add_option("--covariance", c_args.covariance, "Transformation rules under U(param), as qubit,re[,im]");
    check->add_option("--lu-sweep", c_args.lu_sweep, "Tangle invariance sweep, as trials,seed");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "negfont: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*gen) return cmd_gen(gen_args, out);
        if (*measure) return cmd_measure(m_args, out, err);
        if (*check) return cmd_check(c_args, out, err);
    } catch (const UsageError& e) {
        err << "negfont: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        err << "negfont: " << e.what() << "\n";
        return kExitIo;
    } catch (const StateError& e) {
        err << "negfont: invalid state: " << e.what() << "\n";
        return kExitBadState;
    } catch (const std::exception& e) {
        err << "negfont: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace negfont
