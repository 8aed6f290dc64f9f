#include "nltrans/config_io.hpp"

#include <set>

#include "json.hpp"

namespace nltrans {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.contains(it.key()))
            throw ValidationError(where.empty() ? it.key() : where + "." + it.key(),
                                  "unknown key '" + it.key() + "'");
}

template <class T>
T get_required(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key))
        throw ValidationError(where.empty() ? key : where + "." + key,
                              "missing key '" + key + "'");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ValidationError(where.empty() ? key : where + "." + key,
                              "wrong type for key '" + key + "'");
    }
}

template <class T>
T get_optional(const json& obj, const std::string& key, T fallback,
               const std::string& where) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ValidationError(where.empty() ? key : where + "." + key,
                              "wrong type for key '" + key + "'");
    }
}

} // namespace

SimConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("config must be a JSON object");

    reject_unknown_keys(root,
                        {"model", "nu", "m", "n", "t_end", "cfl", "snap_every",
                         "dealias", "diag_sym_every", "initial"},
                        "");

    SimConfig cfg;
    const std::string model = get_required<std::string>(root, "model", "");
    if (model == "arctan") {
        cfg.model = ModelKind::arctan();
    } else if (model == "viscous") {
        if (!root.contains("nu"))
            throw ValidationError("nu", "viscous model requires 'nu'");
        double nu = get_required<double>(root, "nu", "");
        if (!(nu > 0.0)) throw ValidationError("nu", "nu must be positive");
        cfg.model = ModelKind::viscous(nu);
    } else if (model == "cccf") {
        cfg.model = ModelKind::cccf();
    } else if (model == "porous") {
        if (!root.contains("m"))
            throw ValidationError("m", "porous model requires 'm'");
        int m = get_required<int>(root, "m", "");
        if (m < 1) throw ValidationError("m", "m must be >= 1");
        cfg.model = ModelKind::porous(m);
    } else {
        throw ValidationError("model", "unknown model '" + model + "'");
    }
    if (model != "viscous" && root.contains("nu"))
        throw ValidationError("nu", "'nu' is only valid for the viscous model");
    if (model != "porous" && root.contains("m"))
        throw ValidationError("m", "'m' is only valid for the porous model");

    cfg.n = get_required<int>(root, "n", "");
    cfg.t_end = get_required<double>(root, "t_end", "");
    cfg.cfl = get_optional<double>(root, "cfl", 0.5, "");
    cfg.snap_every = get_required<double>(root, "snap_every", "");
    cfg.dealias = get_optional<bool>(root, "dealias", true, "");
    cfg.diag_sym_every = get_optional<double>(root, "diag_sym_every", 0.0, "");

    if (!root.contains("initial"))
        throw ValidationError("initial", "missing key 'initial'");
    const json& ini = root.at("initial");
    if (!ini.is_object())
        throw ValidationError("initial", "'initial' must be an object");
    reject_unknown_keys(ini, {"mean", "modes", "values", "mollify_eps"}, "initial");

    if (ini.contains("values")) {
        cfg.initial.values =
            get_required<std::vector<double>>(ini, "values", "initial");
        if (ini.contains("mean") || ini.contains("modes"))
            throw ValidationError("initial",
                                  "'values' excludes 'mean' and 'modes'");
    } else {
        cfg.initial.mean = get_required<double>(ini, "mean", "initial");
        if (ini.contains("modes")) {
            const json& modes = ini.at("modes");
            if (!modes.is_array())
                throw ValidationError("initial.modes", "'modes' must be an array");
            for (const json& mj : modes) {
                if (!mj.is_object())
                    throw ValidationError("initial.modes", "mode must be an object");
                reject_unknown_keys(mj, {"k", "cos_amp", "sin_amp"}, "initial.modes");
                Mode m;
                m.k = get_required<int>(mj, "k", "initial.modes");
                if (m.k < 1)
                    throw ValidationError("initial.modes", "mode k must be >= 1");
                m.cos_amp = get_optional<double>(mj, "cos_amp", 0.0, "initial.modes");
                m.sin_amp = get_optional<double>(mj, "sin_amp", 0.0, "initial.modes");
                cfg.initial.modes.push_back(m);
            }
        }
    }
    if (ini.contains("mollify_eps"))
        cfg.initial.mollify_eps = get_required<double>(ini, "mollify_eps", "initial");

    cfg.validate(); // throws ValidationError naming the field
    return cfg;
}

std::string config_to_json(const SimConfig& config) {
    json root;
    root["model"] = config.model.name();
    if (config.model.tag == ModelKind::Tag::ViscousArctan) root["nu"] = config.model.nu;
    if (config.model.tag == ModelKind::Tag::Porous) root["m"] = config.model.m;
    root["n"] = config.n;
    root["t_end"] = config.t_end;
    root["cfl"] = config.cfl;
    root["snap_every"] = config.snap_every;
    root["dealias"] = config.dealias;
    root["diag_sym_every"] = config.diag_sym_every;
    json ini;
    if (!config.initial.values.empty()) {
        ini["values"] = config.initial.values;
    } else {
        ini["mean"] = config.initial.mean;
        json modes = json::array();
        for (const Mode& m : config.initial.modes)
            modes.push_back({{"k", m.k}, {"cos_amp", m.cos_amp}, {"sin_amp", m.sin_amp}});
        ini["modes"] = modes;
    }
    if (config.initial.mollify_eps) ini["mollify_eps"] = *config.initial.mollify_eps;
    root["initial"] = ini;
    return root.dump(2);
}

} // namespace nltrans
