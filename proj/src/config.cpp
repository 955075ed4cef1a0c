#include "sbvp/config.hpp"

#include "sbvp/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace sbvp {

namespace {

std::string trim(const std::string& s) {
    auto b = s.begin(), e = s.end();
    while (b != e && std::isspace(static_cast<unsigned char>(*b))) ++b;
    while (e != b && std::isspace(static_cast<unsigned char>(*(e - 1)))) --e;
    return std::string(b, e);
}

bool parse_long(const std::string& s, long& out) {
    try {
        std::size_t pos = 0;
        out = std::stol(s, &pos);
        return pos == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_u64(const std::string& s, std::uint64_t& out) {
    try {
        std::size_t pos = 0;
        out = std::stoull(s, &pos);
        return pos == s.size() && s.find('-') == std::string::npos;
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_double(const std::string& s, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(s, &pos);
        return pos == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

std::string scenario_name(Scenario s) {
    switch (s) {
        case Scenario::solve: return "solve";
        case Scenario::linear_sweep: return "linear-sweep";
        case Scenario::girsanov_check: return "girsanov-check";
        case Scenario::det2_compare: return "det2-compare";
        case Scenario::alpha_table: return "alpha-table";
        case Scenario::condition_check: return "condition-check";
        case Scenario::exp_moment: return "exp-moment";
        case Scenario::resonance_variance: return "resonance-variance";
    }
    throw std::logic_error("scenario_name: unhandled enum value");
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            out["__malformed__"] += line + ";";
            continue;
        }
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

std::variant<ExperimentConfig, std::vector<std::string>> validate_config(
    const std::map<std::string, std::string>& raw) {
    ExperimentConfig cfg;
    std::vector<std::string> bad;

    static const std::map<std::string, Scenario> scenarios = {
        {"solve", Scenario::solve},
        {"linear-sweep", Scenario::linear_sweep},
        {"girsanov-check", Scenario::girsanov_check},
        {"det2-compare", Scenario::det2_compare},
        {"alpha-table", Scenario::alpha_table},
        {"condition-check", Scenario::condition_check},
        {"exp-moment", Scenario::exp_moment},
        {"resonance-variance", Scenario::resonance_variance},
    };

    static const std::vector<std::string> known = {"scenario", "n",        "paths", "seed",
                                                   "f",        "f-params", "tol",   "max-iter",
                                                   "out",      "assert"};

    for (const auto& [key, value] : raw) {
        if (key == "__malformed__") {
            bad.push_back("malformed line(s), expected key=value: " + value);
            continue;
        }
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            bad.push_back("unknown key '" + key + "'");
        }
    }

    if (auto it = raw.find("scenario"); it != raw.end()) {
        const auto s = scenarios.find(it->second);
        if (s == scenarios.end())
            bad.push_back("unknown scenario '" + it->second + "'");
        else
            cfg.scenario = s->second;
    }
    if (auto it = raw.find("n"); it != raw.end()) {
        long n = 0;
        if (!parse_long(it->second, n) || n < 2 || n > 1 << 16)
            bad.push_back("n must be an integer in [2, 65536], got '" + it->second + "'");
        else
            cfg.n = static_cast<int>(n);
    }
    if (auto it = raw.find("paths"); it != raw.end()) {
        long p = 0;
        if (!parse_long(it->second, p) || p < 1)
            bad.push_back("paths must be a positive integer, got '" + it->second + "'");
        else
            cfg.paths = p;
    }
    if (auto it = raw.find("seed"); it != raw.end()) {
        std::uint64_t s = 0;
        if (!parse_u64(it->second, s))
            bad.push_back("seed must be a non-negative integer, got '" + it->second + "'");
        else
            cfg.seed = s;
    } else {
        cfg.warnings.push_back("seed not given; using default " + std::to_string(cfg.seed));
    }
    if (auto it = raw.find("f"); it != raw.end()) cfg.f_name = it->second;
    if (auto it = raw.find("f-params"); it != raw.end()) {
        std::istringstream ps(it->second);
        std::string tok;
        bool ok = true;
        while (std::getline(ps, tok, ',')) {
            tok = trim(tok);
            if (tok.empty()) continue;
            double v = 0.0;
            if (!parse_double(tok, v)) {
                bad.push_back("f-params entry '" + tok + "' is not a number");
                ok = false;
                break;
            }
            cfg.f_params.push_back(v);
        }
        if (!ok) cfg.f_params.clear();
    }
    if (auto it = raw.find("tol"); it != raw.end()) {
        double t = 0.0;
        if (!parse_double(it->second, t) || !(t > 0.0))
            bad.push_back("tol must be a positive number, got '" + it->second + "'");
        else
            cfg.tol = t;
    }
    if (auto it = raw.find("max-iter"); it != raw.end()) {
        long m = 0;
        if (!parse_long(it->second, m) || m < 1)
            bad.push_back("max-iter must be a positive integer, got '" + it->second + "'");
        else
            cfg.max_iter = static_cast<int>(m);
    }
    if (auto it = raw.find("out"); it != raw.end()) {
        if (it->second.empty())
            bad.push_back("out must be a non-empty directory path");
        else
            cfg.output_dir = it->second;
    }
    if (auto it = raw.find("assert"); it != raw.end()) {
        if (it->second == "true" || it->second == "1")
            cfg.assert_mode = true;
        else if (it->second == "false" || it->second == "0")
            cfg.assert_mode = false;
        else
            bad.push_back("assert must be true/false, got '" + it->second + "'");
    }

    if (bad.empty()) {
        try {
            make_nonlinearity(cfg.f_name, cfg.f_params);
        } catch (const std::invalid_argument& e) {
            bad.push_back(e.what());
        }
    }

    if (!bad.empty()) return bad;
    return cfg;
}

}  // namespace sbvp
