#include <doctest.h>

#include <random>

#include "entcast/json_io.hpp"
#include "test_helpers.hpp"

using namespace entcast;

TEST_CASE("pure states round-trip through JSON") {
    std::mt19937_64 rng(90);
    const PureState original(
        {"a1", "b1", "c"}, entcast::testing::random_state_vector(8, rng));
    const PureState back = pure_state_from_json(pure_state_to_json(original));
    CHECK(back.labels() == original.labels());
    CHECK((back.amplitudes() - original.amplitudes()).norm() < 1e-15);
}

TEST_CASE("pure state JSON is stable across calls") {
    const PureState s = bell_state(BellKind::PsiMinus, {"a2", "c"});
    CHECK(pure_state_to_json(s) == pure_state_to_json(s));
}

TEST_CASE("malformed state JSON raises io errors") {
    CHECK_THROWS_AS((void)pure_state_from_json("not json"), Error);
    CHECK_THROWS_AS((void)pure_state_from_json("{\"labels\": [\"x\"]}"), Error);
    CHECK_THROWS_AS(
        (void)pure_state_from_json(
            "{\"labels\": [\"x\"], \"amplitudes\": [[1.0, 0.0], [0.0]]}"),
        Error);
}

TEST_CASE("verdict report carries the windows and criteria") {
    const BroadcastResult res = run_broadcast(0.7071067811865476, 0.7071067811865476,
                                              Reflectivity(1.0 / 3.0));
    const std::string report = verdict_report_json(res);
    CHECK(report.find("\"lambda_d\"") != std::string::npos);
    CHECK(report.find("\"ppt\"") != std::string::npos);
    CHECK(report.find("\"windows\"") != std::string::npos);
    CHECK(report.find("inseparable") != std::string::npos);
}

TEST_CASE("transcript JSON lists ordered events") {
    ProtocolTranscript t;
    t.seed = 7;
    t.add("A1", EventKind::measurement, "Phi+", 0.25);
    t.add("A1", EventKind::classical_send, "Phi+");
    t.add("B1", EventKind::classical_receive, "Phi+");
    const std::string text = transcript_to_json(t);
    CHECK(text.find("\"seed\": 7") != std::string::npos);
    CHECK(text.find("\"action\": \"measurement\"") != std::string::npos);
    CHECK(text.find("\"probability\": 0.25") != std::string::npos);
    CHECK(transcript_to_json(t) == text);
}

TEST_CASE("clone report fields") {
    const std::string report = clone_report_json(0.5, 0.7, 0.7, true);
    CHECK(report.find("\"p\": 0.5") != std::string::npos);
    CHECK(report.find("\"fidelity_B1B2\": 0.7") != std::string::npos);
    CHECK(report.find("\"closed_form_match\": true") != std::string::npos);
}

TEST_CASE("teleportation MC reports serialize per channel") {
    const MonteCarloResult mc{0.722, 0.0005, 1000, 42};
    const std::string text =
        teleport_mc_reports_json({{"rho_a1b1 R=1/3", 4.0 / 3.0, 13.0 / 18.0, mc}});
    CHECK(text.find("\"channel\": \"rho_a1b1 R=1/3\"") != std::string::npos);
    CHECK(text.find("\"F_mc\": 0.722") != std::string::npos);
    CHECK(text.find("\"samples\": 1000") != std::string::npos);
    CHECK(text.find("\"seed\": 42") != std::string::npos);
}
