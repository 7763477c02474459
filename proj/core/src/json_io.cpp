#include "entcast/json_io.hpp"

#include <json.hpp>

namespace entcast {

namespace {

using nlohmann::json;

json window_to_json(const AlphaWindow& w) {
    if (w.empty) return json{{"empty", true}};
    return json{{"empty", false}, {"alpha_sq_lo", w.lo}, {"alpha_sq_hi", w.hi}};
}

}  // namespace

std::string pure_state_to_json(const PureState& state) {
    json amps = json::array();
    for (long i = 0; i < state.amplitudes().size(); ++i) {
        amps.push_back({state.amplitudes()(i).real(), state.amplitudes()(i).imag()});
    }
    const json j{{"labels", state.labels()}, {"amplitudes", amps}};
    return j.dump(2);
}

PureState pure_state_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        raise(Errc::io_error, std::string("pure_state_from_json: ") + e.what());
    }
    if (!j.contains("labels") || !j.contains("amplitudes")) {
        raise(Errc::io_error, "pure_state_from_json: missing labels or amplitudes");
    }
    std::vector<std::string> labels = j["labels"].get<std::vector<std::string>>();
    ComplexVector amps(j["amplitudes"].size());
    long i = 0;
    for (const auto& pair : j["amplitudes"]) {
        if (!pair.is_array() || pair.size() != 2) {
            raise(Errc::io_error, "pure_state_from_json: amplitude must be a [re, im] pair");
        }
        amps(i++) = Complex(pair[0].get<double>(), pair[1].get<double>());
    }
    return PureState(std::move(labels), std::move(amps));
}

std::string verdict_report_json(const BroadcastResult& result) {
    const BroadcastFidelities fid = broadcast_fidelities(result.alpha, result.beta, result.r);
    const json j{
        {"R", result.r.R()},
        {"alpha", {result.alpha.real(), result.alpha.imag()}},
        {"beta", {result.beta.real(), result.beta.imag()}},
        {"lambda_d", result.lambda_d},
        {"lambda_s", result.lambda_s},
        {"F", {{"a1b1", fid.f_a1b1}, {"cd", fid.f_cd}}},
        {"M", {{"a1b1", chsh_M(result.rho_a1b1)}, {"cd", chsh_M(result.rho_cd)}}},
        {"N", {{"a1b1", teleportation_N(result.rho_a1b1).n}, {"cd", teleportation_N(result.rho_cd).n}}},
        {"F_max",
         {{"a1b1", teleportation_N(result.rho_a1b1).f_max},
          {"cd", teleportation_N(result.rho_cd).f_max}}},
        {"ppt",
         {{"a1b1", to_string(ppt_verdict(result.rho_a1b1))},
          {"cd", to_string(ppt_verdict(result.rho_cd))},
          {"a1c", to_string(ppt_verdict(result.rho_a1c))}}},
        {"windows",
         {{"a1b1", window_to_json(window_a1b1(result.r))},
          {"cd", window_to_json(window_cd(result.r))},
          {"a1c", window_to_json(window_a1c(result.r))},
          {"combined", window_to_json(broadcast_condition(result.r))}}},
    };
    return j.dump(2);
}

std::string transcript_to_json(const ProtocolTranscript& transcript) {
    json events = json::array();
    for (const auto& e : transcript.events) {
        json ev{{"step", e.step},
                {"actor", e.actor},
                {"action", to_string(e.kind)},
                {"payload", e.payload}};
        if (e.probability) ev["probability"] = *e.probability;
        events.push_back(std::move(ev));
    }
    json j{{"events", events}};
    if (transcript.seed) j["seed"] = *transcript.seed;
    return j.dump(2);
}

std::string clone_report_json(double p, double fidelity_b1b2, double fidelity_b3b4,
                              bool closed_form_match) {
    const json j{{"p", p},
                 {"fidelity_B1B2", fidelity_b1b2},
                 {"fidelity_B3B4", fidelity_b3b4},
                 {"closed_form_match", closed_form_match}};
    return j.dump(2);
}

std::string teleport_mc_reports_json(const std::vector<TeleportMcReport>& reports) {
    json all = json::array();
    for (const auto& r : reports) {
        all.push_back(json{{"channel", r.channel}, {"N", r.n},
                           {"F_max_formula", r.f_max_formula}, {"F_mc", r.mc.mean},
                           {"stderr", r.mc.std_error},         {"samples", r.mc.samples},
                           {"seed", r.mc.seed}});
    }
    return all.dump(2);
}

}  // namespace entcast
