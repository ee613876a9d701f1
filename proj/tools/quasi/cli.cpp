#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "quasi/oracle.hpp"
#include "quasi/quasi.hpp"

namespace quasi::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr Index kDefaultMaxN = 1'000'000;
constexpr Index kDefaultMaxNQuadratic = 10'000;

// Raised for bad input data (as opposed to bad flags).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string text;
    std::string file;
    bool lines = false;
    bool json = false;
    std::optional<Index> max_n;
    bool with_seed_array = false;
    Index length = 0;
    Index min = 0;
};

struct Input {
    Index line = 0;  // 1-based line number with --lines, 0 otherwise
    std::string bytes;
};

std::vector<Input> read_inputs(const Options& o) {
    std::string data;
    if (!o.file.empty()) {
        std::ifstream in(o.file, std::ios::binary);
        if (!in) throw InputError("cannot read file: " + o.file);
        std::ostringstream ss;
        ss << in.rdbuf();
        data = ss.str();
    } else {
        data = o.text;
    }
    std::vector<Input> inputs;
    if (!o.lines) {
        inputs.push_back({0, std::move(data)});
    } else {
        std::size_t pos = 0;
        Index line = 0;
        while (pos < data.size()) {
            const std::size_t nl = data.find('\n', pos);
            const std::size_t end = nl == std::string::npos ? data.size() : nl;
            inputs.push_back({++line, data.substr(pos, end - pos)});
            pos = end + 1;
        }
    }
    if (inputs.empty()) throw InputError("empty input");
    for (const auto& in : inputs) {
        if (in.bytes.empty())
            throw InputError(in.line ? "empty input on line " + std::to_string(in.line) : "empty input");
    }
    return inputs;
}

json to_json(const PosArray& a) { return json(a.to_vector()); }

json seed_json(const Text& u, const SeedResult& s) {
    return json{{"length", s.length}, {"start", s.factor.start}, {"word", escape(u.factor(s.factor.start, s.length))}};
}

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    void header(const std::vector<std::string>& cols) {
        if (o_.json) return;
        bool first = true;
        if (o_.lines) {
            out_ << "line";
            first = false;
        }
        for (const auto& c : cols) {
            if (!first) out_ << '\t';
            out_ << c;
            first = false;
        }
        out_ << '\n';
    }

    // Starts a TSV row; prefixes the line number with --lines.
    std::ostream& row(const Input& in) {
        if (o_.lines) out_ << in.line << '\t';
        return out_;
    }

    json object(const Input& in) const {
        json j;
        if (o_.lines) j["line"] = in.line;
        j["input"] = escape(in.bytes);
        return j;
    }

    void add(json j) { results_.push_back(std::move(j)); }

    void finish() {
        if (o_.json) out_ << results_.dump(2) << '\n';
    }

    const Options& options() const { return o_; }

private:
    const Options& o_;
    std::ostream& out_;
    json results_ = json::array();
};

void cmd_arrays(Runner& r, const Input& in, const Text& u) {
    const bool with_seed = r.options().with_seed_array;
    const PosArray b = border_array(u);
    const PosArray p = period_array(b);
    const PosArray c = cover_array(b);
    const PosArray cm = longest_cover_array(u);
    const PosArray ls = left_seed_array(u);
    const PosArray lsm = longest_left_seed_array(u);
    const PosArray seed = with_seed ? seed_array(u) : PosArray();
    if (r.options().json) {
        json j = r.object(in);
        j["P"] = to_json(p);
        j["B"] = to_json(b);
        j["C"] = to_json(c);
        j["CM"] = to_json(cm);
        j["LSeed"] = to_json(ls);
        j["LSeedM"] = to_json(lsm);
        if (with_seed) j["Seed"] = to_json(seed);
        r.add(std::move(j));
        return;
    }
    for (Index i = 1; i <= u.size(); ++i) {
        auto& os = r.row(in);
        os << i << '\t' << escape(u.factor(i, 1)) << '\t' << p[i] << '\t' << b[i] << '\t' << c[i] << '\t' << cm[i]
           << '\t' << ls[i] << '\t' << lsm[i];
        if (with_seed) os << '\t' << seed[i];
        os << '\n';
    }
}

void emit_seed(Runner& r, const Input& in, const Text& u, const SeedResult& s, std::optional<Index> min) {
    if (r.options().json) {
        json j = r.object(in);
        if (min) j["min"] = *min;
        j["shortest_seed"] = seed_json(u, s);
        r.add(std::move(j));
        return;
    }
    r.row(in) << s.length << '\t' << s.factor.start << '\t' << escape(u.factor(s.factor.start, s.length)) << '\n';
}

void cmd_seeds(Runner& r, const Input& in, const Text& u) {
    const Index k = r.options().length;
    const auto found = seeds_of_length(u, k);
    if (r.options().json) {
        json j = r.object(in);
        j["length"] = k;
        json list = json::array();
        for (const auto& f : found) list.push_back(json{{"start", f.start}, {"word", escape(u.factor(f.start, f.len))}});
        j["seeds"] = std::move(list);
        r.add(std::move(j));
        return;
    }
    for (const auto& f : found) r.row(in) << f.len << '\t' << f.start << '\t' << escape(u.factor(f.start, f.len)) << '\n';
}

void cmd_seed_array(Runner& r, const Input& in, const Text& u) {
    const PosArray seed = seed_array(u);
    if (r.options().json) {
        json j = r.object(in);
        j["Seed"] = to_json(seed);
        r.add(std::move(j));
        return;
    }
    for (Index i = 1; i <= u.size(); ++i) r.row(in) << i << '\t' << seed[i] << '\n';
}

// Compares every fast result with the oracle. Returns false on any mismatch.
bool cmd_verify(Runner& r, const Input& in, const Text& u) {
    const auto brute = oracle::brute_arrays(u);
    const auto all = oracle::all_seeds(u);
    const PosArray b = border_array(u);

    bool seeds_ok = true;
    const FixedLengthSeedFinder finder(u);
    for (Index k = 1; k <= u.size(); ++k) {
        std::vector<Index> starts;
        for (const auto& f : finder.seeds(k)) starts.push_back(f.start);
        seeds_ok = seeds_ok && starts == all[static_cast<std::size_t>(k)];
    }
    const std::vector<std::pair<const char*, bool>> checks{
        {"P", period_array(b) == brute.P},
        {"B", b == brute.B},
        {"P'", suffix_period_array(u) == brute.suffix_P},
        {"C", cover_array(b) == brute.C},
        {"CM", longest_cover_array(u) == brute.CM},
        {"LSeed", left_seed_array(u) == brute.LSeed},
        {"LSeed-alt", left_seed_array_alt(u) == brute.LSeed},
        {"LSeedM", longest_left_seed_array(u) == brute.LSeedM},
        {"Seed", seed_array(u) == brute.Seed},
        {"shortest_seed", shortest_seed(u).length == oracle::shortest_seed_length(u)},
        {"seeds_of_length", seeds_ok},
    };
    bool ok = true;
    for (const auto& [name, pass] : checks) ok = ok && pass;
    if (r.options().json) {
        json j = r.object(in);
        json c = json::object();
        for (const auto& [name, pass] : checks) c[name] = pass;
        j["checks"] = std::move(c);
        j["ok"] = ok;
        r.add(std::move(j));
    } else {
        for (const auto& [name, pass] : checks) r.row(in) << name << '\t' << (pass ? "ok" : "MISMATCH") << '\n';
    }
    return ok;
}

void add_common(CLI::App* sub, Options& o) {
    auto* text = sub->add_option("--text", o.text, "Input string");
    auto* file = sub->add_option("--file", o.file, "Read input bytes from a file");
    text->excludes(file);
    sub->add_flag("--lines", o.lines, "Treat each line of the input as a separate string");
    sub->add_flag("--json", o.json, "Emit JSON instead of TSV");
    sub->add_option("--max-n", o.max_n, "Refuse inputs longer than this")->check(CLI::PositiveNumber);
}

} // namespace

std::string escape(std::string_view bytes) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size());
    for (char ch : bytes) {
        const auto b = static_cast<unsigned char>(ch);
        if (b >= 0x20 && b < 0x7f) {
            out += ch;
        } else {
            out += "\\x";
            out += kHex[b >> 4];
            out += kHex[b & 0xf];
        }
    }
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Periods, covers and seeds of strings", "quasi"};
    app.require_subcommand(1);
    Options o;

    auto* arrays = app.add_subcommand("arrays", "Per-prefix arrays P, B, C, CM, LSeed, LSeedM (and Seed)");
    add_common(arrays, o);
    arrays->add_flag("--with-seed-array", o.with_seed_array, "Also compute the seed array (quadratic)");

    auto* shortest = app.add_subcommand("shortest-seed", "A shortest seed of each input");
    add_common(shortest, o);

    auto* seeds = app.add_subcommand("seeds", "All seeds of a given length");
    add_common(seeds, o);
    seeds->add_option("--length", o.length, "Seed length")->required()->check(CLI::PositiveNumber);

    auto* seed_arr = app.add_subcommand("seed-array", "Shortest seed length of every prefix (quadratic)");
    add_common(seed_arr, o);

    auto* min_seed = app.add_subcommand("min-seed", "A shortest seed of length at least --min");
    add_common(min_seed, o);
    min_seed->add_option("--min", o.min, "Minimum seed length")->required()->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Cross-check all fast results against brute force");
    add_common(verify, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    if (o.text.empty() && o.file.empty() && sub->count("--text") == 0) {
        err << "quasi: one of --text or --file is required\n" << sub->help();
        return kUsage;
    }

    const bool quadratic = sub == seed_arr || (sub == arrays && o.with_seed_array);
    Index max_n = o.max_n.value_or(quadratic ? kDefaultMaxNQuadratic : kDefaultMaxN);
    if (sub == verify) max_n = std::min(max_n, oracle::kMaxLength);

    Runner runner(o, out);
    bool all_ok = true;
    try {
        const auto inputs = read_inputs(o);
        for (const auto& in : inputs) {
            if (in.bytes.size() > static_cast<std::size_t>(max_n))
                throw InputError("input of length " + std::to_string(in.bytes.size()) + " exceeds --max-n " +
                                 std::to_string(max_n));
        }
        if (sub == min_seed || sub == seeds) {
            const char* flag = sub == seeds ? "--length " : "--min ";
            const Index bound = sub == seeds ? o.length : o.min;
            for (const auto& in : inputs) {
                if (static_cast<std::size_t>(bound) > in.bytes.size())
                    throw InputError(flag + std::to_string(bound) + " exceeds input length " +
                                     std::to_string(in.bytes.size()));
            }
        }

        if (sub == arrays) {
            std::vector<std::string> cols{"i", "u", "P", "B", "C", "CM", "LSeed", "LSeedM"};
            if (o.with_seed_array) cols.emplace_back("Seed");
            runner.header(cols);
        } else if (sub == seed_arr) {
            runner.header({"i", "Seed"});
        } else if (sub == verify) {
            runner.header({"check", "status"});
        } else {
            runner.header({"length", "start", "word"});
        }

        for (const auto& in : inputs) {
            const Text u(in.bytes);
            if (sub == arrays) cmd_arrays(runner, in, u);
            else if (sub == shortest) emit_seed(runner, in, u, shortest_seed(u), std::nullopt);
            else if (sub == seeds) cmd_seeds(runner, in, u);
            else if (sub == seed_arr) cmd_seed_array(runner, in, u);
            else if (sub == min_seed) emit_seed(runner, in, u, shortest_seed_at_least(u, o.min), o.min);
            else if (sub == verify) all_ok = cmd_verify(runner, in, u) && all_ok;
        }
    } catch (const InputError& e) {
        err << "quasi: " << e.what() << '\n';
        return kInvalidInput;
    }
    runner.finish();
    return all_ok ? kOk : kMismatch;
}

} // namespace quasi::cli
