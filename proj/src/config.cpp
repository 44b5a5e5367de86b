#include "epdiff/config.hpp"

#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace epdiff {

namespace {

const std::set<std::string> kKnownKeys = {
    "model", "dim", "nx", "ny", "lx", "ly", "alpha", "nu", "g", "dt", "t_end",
    "output_every", "ic", "ic_amplitude", "ic_width", "ic_center_x", "ic_center_y",
    "seed", "dealias", "output_dir"};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct RawEntry {
    std::string value;
    int line;
};

double parse_real(const std::string& key, const RawEntry& e) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(e.value, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config line " + std::to_string(e.line) + ": key '" + key +
                              "' has non-numeric value '" + e.value + "'",
                          key, e.line);
    }
    if (pos != e.value.size())
        throw ConfigError("config line " + std::to_string(e.line) + ": key '" + key +
                              "' has trailing characters in value '" + e.value + "'",
                          key, e.line);
    return v;
}

std::uint64_t parse_unsigned(const std::string& key, const RawEntry& e) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        if (!e.value.empty() && e.value[0] == '-') throw std::invalid_argument("negative");
        v = std::stoull(e.value, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config line " + std::to_string(e.line) + ": key '" + key +
                              "' must be a non-negative integer, got '" + e.value + "'",
                          key, e.line);
    }
    if (pos != e.value.size())
        throw ConfigError("config line " + std::to_string(e.line) + ": key '" + key +
                              "' has trailing characters in value '" + e.value + "'",
                          key, e.line);
    return v;
}

bool parse_bool(const std::string& key, const RawEntry& e) {
    if (e.value == "true") return true;
    if (e.value == "false") return false;
    throw ConfigError("config line " + std::to_string(e.line) + ": key '" + key +
                          "' must be 'true' or 'false', got '" + e.value + "'",
                      key, e.line);
}

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string to_string(Model m) {
    switch (m) {
    case Model::SwPrimitive: return "sw_primitive";
    case Model::SwMomentum: return "sw_momentum";
    case Model::EpdiffAdvective: return "epdiff_advective";
    case Model::EpdiffCurl: return "epdiff_curl";
    }
    return "?";
}

std::string to_string(InitialCondition ic) {
    switch (ic) {
    case InitialCondition::Peakon: return "peakon";
    case InitialCondition::Gaussian: return "gaussian";
    case InitialCondition::RandomSmooth: return "random_smooth";
    }
    return "?";
}

RunConfig parse_config(const std::string& text) {
    std::map<std::string, RawEntry> entries;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                                  ": expected key=value, got '" + line + "'",
                              "", lineno);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!kKnownKeys.count(key))
            throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" +
                                  key + "'",
                              key, lineno);
        if (entries.count(key))
            throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" +
                                  key + "'",
                              key, lineno);
        entries[key] = RawEntry{value, lineno};
    }

    auto require = [&](const std::string& key) -> const RawEntry& {
        auto it = entries.find(key);
        if (it == entries.end())
            throw ConfigError("config: missing required key '" + key + "'", key, 0);
        return it->second;
    };

    RunConfig c;

    {
        const RawEntry& e = require("model");
        if (e.value == "sw_primitive") c.model = Model::SwPrimitive;
        else if (e.value == "sw_momentum") c.model = Model::SwMomentum;
        else if (e.value == "epdiff_advective") c.model = Model::EpdiffAdvective;
        else if (e.value == "epdiff_curl") c.model = Model::EpdiffCurl;
        else
            throw ConfigError("config line " + std::to_string(e.line) +
                                  ": unknown model '" + e.value + "'",
                              "model", e.line);
    }
    c.dim = static_cast<int>(parse_unsigned("dim", require("dim")));
    c.nx = parse_unsigned("nx", require("nx"));
    c.lx = parse_real("lx", require("lx"));
    if (c.dim == 2) {
        c.ny = parse_unsigned("ny", require("ny"));
        c.ly = parse_real("ly", require("ly"));
    } else {
        if (entries.count("ny")) c.ny = parse_unsigned("ny", entries.at("ny"));
        if (entries.count("ly")) c.ly = parse_real("ly", entries.at("ly"));
    }
    if (is_epdiff(c.model)) {
        c.alpha = parse_real("alpha", require("alpha"));
        c.nu = parse_real("nu", require("nu"));
    } else {
        if (entries.count("alpha")) c.alpha = parse_real("alpha", entries.at("alpha"));
        if (entries.count("nu")) c.nu = parse_real("nu", entries.at("nu"));
    }
    if (entries.count("g")) c.g = parse_real("g", entries.at("g"));
    c.dt = parse_real("dt", require("dt"));
    c.t_end = parse_real("t_end", require("t_end"));
    c.output_every = parse_unsigned("output_every", require("output_every"));
    {
        const RawEntry& e = require("ic");
        if (e.value == "peakon") c.ic = InitialCondition::Peakon;
        else if (e.value == "gaussian") c.ic = InitialCondition::Gaussian;
        else if (e.value == "random_smooth") c.ic = InitialCondition::RandomSmooth;
        else
            throw ConfigError("config line " + std::to_string(e.line) + ": unknown ic '" +
                                  e.value + "'",
                              "ic", e.line);
    }
    c.ic_amplitude = parse_real("ic_amplitude", require("ic_amplitude"));
    c.ic_width = parse_real("ic_width", require("ic_width"));
    c.ic_center_x = parse_real("ic_center_x", require("ic_center_x"));
    if (c.dim == 2)
        c.ic_center_y = parse_real("ic_center_y", require("ic_center_y"));
    else if (entries.count("ic_center_y"))
        c.ic_center_y = parse_real("ic_center_y", entries.at("ic_center_y"));
    if (entries.count("seed")) c.seed = parse_unsigned("seed", entries.at("seed"));
    if (entries.count("dealias")) c.dealias = parse_bool("dealias", entries.at("dealias"));
    c.output_dir = require("output_dir").value;

    try {
        validate_config(c);
    } catch (const std::invalid_argument& err) {
        throw ConfigError(err.what(), "", 0);
    }
    return c;
}

std::string serialize_config(const RunConfig& c) {
    std::ostringstream out;
    out << "model = " << to_string(c.model) << "\n";
    out << "dim = " << c.dim << "\n";
    out << "nx = " << c.nx << "\n";
    if (c.dim == 2) out << "ny = " << c.ny << "\n";
    out << "lx = " << fmt_real(c.lx) << "\n";
    if (c.dim == 2) out << "ly = " << fmt_real(c.ly) << "\n";
    out << "alpha = " << fmt_real(c.alpha) << "\n";
    out << "nu = " << fmt_real(c.nu) << "\n";
    out << "g = " << fmt_real(c.g) << "\n";
    out << "dt = " << fmt_real(c.dt) << "\n";
    out << "t_end = " << fmt_real(c.t_end) << "\n";
    out << "output_every = " << c.output_every << "\n";
    out << "ic = " << to_string(c.ic) << "\n";
    out << "ic_amplitude = " << fmt_real(c.ic_amplitude) << "\n";
    out << "ic_width = " << fmt_real(c.ic_width) << "\n";
    out << "ic_center_x = " << fmt_real(c.ic_center_x) << "\n";
    if (c.dim == 2) out << "ic_center_y = " << fmt_real(c.ic_center_y) << "\n";
    out << "seed = " << c.seed << "\n";
    out << "dealias = " << (c.dealias ? "true" : "false") << "\n";
    out << "output_dir = " << c.output_dir << "\n";
    return out.str();
}

bool operator==(const RunConfig& a, const RunConfig& b) {
    const bool dim2 = a.dim == 2;
    return a.model == b.model && a.dim == b.dim && a.nx == b.nx && a.lx == b.lx &&
           (!dim2 || (a.ny == b.ny && a.ly == b.ly && a.ic_center_y == b.ic_center_y)) &&
           a.alpha == b.alpha && a.nu == b.nu && a.g == b.g && a.dt == b.dt &&
           a.t_end == b.t_end && a.output_every == b.output_every && a.ic == b.ic &&
           a.ic_amplitude == b.ic_amplitude && a.ic_width == b.ic_width &&
           a.ic_center_x == b.ic_center_x && a.seed == b.seed && a.dealias == b.dealias &&
           a.output_dir == b.output_dir;
}

} // namespace epdiff
