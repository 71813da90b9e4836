#include "brimsim/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "brimsim/errors.hpp"

namespace brimsim {

SolverKind parse_solver_kind(const std::string& name) {
    if (name == "brim") return SolverKind::brim;
    if (name == "sa") return SolverKind::sa;
    if (name == "asa") return SolverKind::asa;
    if (name == "oim") return SolverKind::oim;
    throw ConfigError("unknown solver '" + name + "' (brim | sa | asa | oim)");
}

std::string to_string(SolverKind kind) {
    switch (kind) {
    case SolverKind::brim: return "brim";
    case SolverKind::sa: return "sa";
    case SolverKind::asa: return "asa";
    case SolverKind::oim: return "oim";
    }
    return "brim";
}

double SolverConfig::budget() const {
    switch (solver) {
    case SolverKind::brim:
    case SolverKind::oim: return t_end;
    case SolverKind::sa: return double(sa_sweeps);
    case SolverKind::asa: return double(asa_cycles);
    }
    return t_end;
}

void SolverConfig::set_budget(double b) {
    if (!(b > 0.0)) throw ConfigError("budget must be positive");
    switch (solver) {
    case SolverKind::brim:
    case SolverKind::oim: t_end = b; break;
    case SolverKind::sa: sa_sweeps = std::uint64_t(std::llround(b)); break;
    case SolverKind::asa: asa_cycles = std::uint64_t(std::llround(b)); break;
    }
}

namespace {

double parse_double(const std::string& key, const std::string& value) {
    if (value == "inf" || value == "infinity")
        return std::numeric_limits<double>::infinity();
    double v = 0.0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || p != value.data() + value.size())
        throw ConfigError("bad numeric value '" + value + "' for key '" + key + "'");
    return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || p != value.data() + value.size())
        throw ConfigError("bad integer value '" + value + "' for key '" + key + "'");
    return v;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string fmt(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

} // namespace

void SolverConfig::set(const std::string& key, const std::string& value) {
    if (key == "solver") {
        solver = parse_solver_kind(value);
    } else if (key == "mode") {
        if (value == "normalized") mode = BrimMode::normalized;
        else if (value == "physical") mode = BrimMode::physical;
        else throw ConfigError("mode must be 'normalized' or 'physical'");
    } else if (key == "lambda") {
        lambda = parse_double(key, value);
    } else if (key == "capacitance") {
        params.capacitance = parse_double(key, value);
    } else if (key == "leak_resistance") {
        params.leak_resistance = parse_double(key, value);
    } else if (key == "coupling_resistance") {
        params.coupling_resistance = parse_double(key, value);
    } else if (key == "ziv_v_stable") {
        params.ziv.v_stable = parse_double(key, value);
    } else if (key == "ziv_g_peak") {
        params.ziv.g_peak = parse_double(key, value);
    } else if (key == "ziv_shape") {
        if (value == "cubic") params.ziv.shape = ZivShape::cubic;
        else if (value == "piecewise_linear") params.ziv.shape = ZivShape::piecewise_linear;
        else throw ConfigError("ziv_shape must be 'cubic' or 'piecewise_linear'");
    } else if (key == "schedule") {
        if (value == "exponential_rise") schedule.shape = ScheduleShape::exponential_rise;
        else if (value == "constant") schedule.shape = ScheduleShape::constant;
        else throw ConfigError("schedule must be 'exponential_rise' or 'constant'");
    } else if (key == "c_min") {
        schedule.c_min = parse_double(key, value);
    } else if (key == "c_max") {
        schedule.c_max = parse_double(key, value);
    } else if (key == "tau_a") {
        schedule.tau_a = parse_double(key, value);
    } else if (key == "perturb_period") {
        perturb_period = parse_double(key, value);
    } else if (key == "perturb_nodes") {
        perturb_nodes = std::uint32_t(parse_u64(key, value));
    } else if (key == "perturb_seed") {
        perturb_seed = parse_u64(key, value);
    } else if (key == "t_end") {
        t_end = parse_double(key, value);
    } else if (key == "integrator") {
        if (value == "rk4") integrator = IntegratorKind::fixed_rk4;
        else if (value == "rk45") integrator = IntegratorKind::adaptive_rk45;
        else throw ConfigError("integrator must be 'rk4' or 'rk45'");
    } else if (key == "dt") {
        dt = parse_double(key, value);
    } else if (key == "rel_tol") {
        rel_tol = parse_double(key, value);
    } else if (key == "abs_tol") {
        abs_tol = parse_double(key, value);
    } else if (key == "dt_min") {
        dt_min = parse_double(key, value);
    } else if (key == "init_amplitude") {
        init_amplitude = parse_double(key, value);
    } else if (key == "trace_stride") {
        trace_stride = std::uint32_t(parse_u64(key, value));
    } else if (key == "quant_bits") {
        quant_bits = int(parse_u64(key, value));
    } else if (key == "sa_sweeps") {
        sa_sweeps = parse_u64(key, value);
    } else if (key == "sa_t0") {
        sa_t0 = parse_double(key, value);
    } else if (key == "sa_t_end") {
        sa_t_end = parse_double(key, value);
    } else if (key == "sa_decay") {
        if (value == "geometric") sa_decay = TempDecay::geometric;
        else if (value == "linear") sa_decay = TempDecay::linear;
        else throw ConfigError("sa_decay must be 'geometric' or 'linear'");
    } else if (key == "asa_cycles") {
        asa_cycles = parse_u64(key, value);
    } else if (key == "asa_p0") {
        asa_p0 = parse_double(key, value);
    } else if (key == "seed") {
        seed = parse_u64(key, value);
    } else {
        throw ConfigError("unknown configuration key '" + key + "'");
    }
}

std::string SolverConfig::serialize() const {
    std::ostringstream out;
    out << "solver = " << to_string(solver) << '\n';
    out << "mode = " << (mode == BrimMode::normalized ? "normalized" : "physical") << '\n';
    out << "lambda = " << fmt(lambda) << '\n';
    out << "capacitance = " << fmt(params.capacitance) << '\n';
    out << "leak_resistance = " << fmt(params.leak_resistance) << '\n';
    out << "coupling_resistance = " << fmt(params.coupling_resistance) << '\n';
    out << "ziv_v_stable = " << fmt(params.ziv.v_stable) << '\n';
    out << "ziv_g_peak = " << fmt(params.ziv.g_peak) << '\n';
    out << "ziv_shape = "
        << (params.ziv.shape == ZivShape::cubic ? "cubic" : "piecewise_linear") << '\n';
    out << "schedule = "
        << (schedule.shape == ScheduleShape::exponential_rise ? "exponential_rise"
                                                              : "constant")
        << '\n';
    out << "c_min = " << fmt(schedule.c_min) << '\n';
    out << "c_max = " << fmt(schedule.c_max) << '\n';
    out << "tau_a = " << fmt(schedule.tau_a) << '\n';
    out << "perturb_period = " << fmt(perturb_period) << '\n';
    out << "perturb_nodes = " << perturb_nodes << '\n';
    out << "perturb_seed = " << perturb_seed << '\n';
    out << "t_end = " << fmt(t_end) << '\n';
    out << "integrator = "
        << (integrator == IntegratorKind::fixed_rk4 ? "rk4" : "rk45") << '\n';
    out << "dt = " << fmt(dt) << '\n';
    out << "rel_tol = " << fmt(rel_tol) << '\n';
    out << "abs_tol = " << fmt(abs_tol) << '\n';
    out << "dt_min = " << fmt(dt_min) << '\n';
    out << "init_amplitude = " << fmt(init_amplitude) << '\n';
    out << "trace_stride = " << trace_stride << '\n';
    out << "quant_bits = " << quant_bits << '\n';
    out << "sa_sweeps = " << sa_sweeps << '\n';
    out << "sa_t0 = " << fmt(sa_t0) << '\n';
    out << "sa_t_end = " << fmt(sa_t_end) << '\n';
    out << "sa_decay = " << (sa_decay == TempDecay::geometric ? "geometric" : "linear")
        << '\n';
    out << "asa_cycles = " << asa_cycles << '\n';
    out << "asa_p0 = " << fmt(asa_p0) << '\n';
    out << "seed = " << seed << '\n';
    return out.str();
}

SolverConfig load_config(std::istream& in) {
    SolverConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", lineno);
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ParseError("expected 'key = value'", lineno);
        try {
            cfg.set(key, value);
        } catch (const ConfigError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    return cfg;
}

SolverConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return load_config(in);
}

} // namespace brimsim
