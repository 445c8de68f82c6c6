#include <doctest.h>

#include <map>
#include <random>
#include <stdexcept>
#include <utility>

#include "memtune/transition_graph.h"

using namespace memtune;

TEST_CASE("graphs start at rest with g_min everywhere") {
    TransitionGraph pitch(AlphabetKind::Pitch);
    TransitionGraph tempo(AlphabetKind::Duration);
    CHECK(pitch.size() == 24);
    CHECK(tempo.size() == 9);

    Matrix weights = pitch.effective_weights();
    CHECK(weights.rows() == 24);
    CHECK(weights.cols() == 24);
    for (double w : weights.values()) CHECK(w == pitch.curve().g_min);
    Matrix states = pitch.states();
    for (double s : states.values()) CHECK(s == 0.0);
}

TEST_CASE("a spike strengthens the forward path and weakens the reverse") {
    TransitionGraph graph(AlphabetKind::Duration);
    Matrix counts(9, 9);
    counts(5, 2) = 3.0;
    graph.seed_from_counts(counts);

    graph.apply_spike(2, 5, 1.0, 1.0);
    CHECK(graph.state(2, 5) == 1.0);
    CHECK(graph.state(5, 2) == 2.0);

    SUBCASE("the reverse path clamps at zero") {
        graph.apply_spike(2, 5, 1.0, 1.0);
        graph.apply_spike(2, 5, 1.0, 1.0);
        CHECK(graph.state(5, 2) == 0.0);
        graph.apply_spike(2, 5, 1.0, 1.0);
        CHECK(graph.state(5, 2) == 0.0);
        CHECK(graph.state(2, 5) == 4.0);
    }
}

TEST_CASE("a self transition only strengthens itself") {
    TransitionGraph graph(AlphabetKind::Duration);
    graph.apply_spike(4, 4, 1.0, 1.0);
    CHECK(graph.state(4, 4) == 1.0);

    graph.advance_relaxation();
    CHECK(graph.effective_weight(4, 4) ==
          doctest::Approx(0.25 * conductance(graph.curve(), 1.0)));
}

TEST_CASE("relaxation reads quarter, half, then full weight after a spike") {
    TransitionGraph graph(AlphabetKind::Pitch);
    graph.apply_spike(1, 2, 1.0, 1.0);
    double full = conductance(graph.curve(), 1.0);

    CHECK(graph.effective_weight(1, 2) == full);

    graph.advance_relaxation();
    CHECK(graph.effective_weight(1, 2) == doctest::Approx(0.25 * full));
    graph.advance_relaxation();
    CHECK(graph.effective_weight(1, 2) == doctest::Approx(0.5 * full));
    graph.advance_relaxation();
    CHECK(graph.effective_weight(1, 2) == full);
    graph.advance_relaxation();
    CHECK(graph.effective_weight(1, 2) == full);
}

TEST_CASE("the reverse element relaxes on the same schedule") {
    TransitionGraph graph(AlphabetKind::Pitch);
    Matrix counts(24, 24);
    counts(2, 1) = 4.0;
    graph.seed_from_counts(counts);
    graph.apply_spike(1, 2, 1.0, 1.0);

    double reverse = conductance(graph.curve(), 3.0);
    graph.advance_relaxation();
    CHECK(graph.effective_weight(2, 1) == doctest::Approx(0.25 * reverse));
    graph.advance_relaxation();
    CHECK(graph.effective_weight(2, 1) == doctest::Approx(0.5 * reverse));
    graph.advance_relaxation();
    CHECK(graph.effective_weight(2, 1) == reverse);
}

TEST_CASE("re-spiking restarts the relaxation schedule") {
    TransitionGraph graph(AlphabetKind::Duration);
    graph.apply_spike(0, 1, 1.0, 1.0);
    graph.advance_relaxation(); // quarter
    graph.apply_spike(0, 1, 1.0, 1.0);

    double full = conductance(graph.curve(), 2.0);
    CHECK(graph.effective_weight(0, 1) == full);
    graph.advance_relaxation();
    CHECK(graph.effective_weight(0, 1) == doctest::Approx(0.25 * full));
    graph.advance_relaxation();
    CHECK(graph.effective_weight(0, 1) == doctest::Approx(0.5 * full));
    graph.advance_relaxation();
    CHECK(graph.effective_weight(0, 1) == full);
}

TEST_CASE("untouched elements keep their weight while others spike") {
    TransitionGraph graph(AlphabetKind::Pitch);
    Matrix counts(24, 24);
    counts(7, 8) = 2.0;
    graph.seed_from_counts(counts);
    double bystander = graph.effective_weight(7, 8);

    graph.apply_spike(3, 4, 1.0, 1.0);
    graph.advance_relaxation();
    graph.apply_spike(10, 11, 1.0, 1.0);
    graph.advance_relaxation();
    CHECK(graph.effective_weight(7, 8) == bystander);
}

TEST_CASE("seed_from_counts validates its input") {
    TransitionGraph graph(AlphabetKind::Duration);
    CHECK_THROWS_AS(graph.seed_from_counts(Matrix(8, 9)), std::invalid_argument);
    CHECK_THROWS_AS(graph.seed_from_counts(Matrix(24, 24)), std::invalid_argument);

    Matrix negative(9, 9);
    negative(1, 1) = -1.0;
    CHECK_THROWS_AS(graph.seed_from_counts(negative), std::invalid_argument);
    CHECK_THROWS_AS(graph.seed_from_counts(Matrix(9, 9), 0.0), std::invalid_argument);

    Matrix counts(9, 9);
    counts(3, 6) = 4.0;
    graph.seed_from_counts(counts, 0.5);
    CHECK(graph.state(3, 6) == 2.0);
    CHECK(graph.effective_weight(3, 6) == conductance(graph.curve(), 2.0));
}

TEST_CASE("set_states clears relaxation bookkeeping") {
    TransitionGraph graph(AlphabetKind::Duration);
    graph.apply_spike(2, 3, 1.0, 1.0);
    graph.set_states(graph.states());
    graph.advance_relaxation();
    CHECK(graph.effective_weight(2, 3) == conductance(graph.curve(), 1.0));

    Matrix bad(9, 9);
    bad(0, 0) = -0.5;
    CHECK_THROWS_AS(graph.set_states(bad), std::invalid_argument);
}

TEST_CASE("random spike/advance sequences match a reference model") {
    // Reference model: per element, raw state plus steps-since-spike; the
    // readout factor is 0.25 one advance after the spike, 0.5 after two,
    // and 1.0 otherwise.
    struct ModelElement {
        double state = 0.0;
        int age = -1; // advances since last spike, -1 = never spiked
    };

    TransitionGraph graph(AlphabetKind::Duration);
    std::map<std::pair<int, int>, ModelElement> model;
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> symbol(0, 8);
    std::uniform_int_distribution<int> action(0, 3);

    auto model_weight = [&](int i, int j) {
        const ModelElement& elem = model[{i, j}];
        double factor = elem.age == 1 ? 0.25 : elem.age == 2 ? 0.5 : 1.0;
        return conductance(graph.curve(), elem.state) * factor;
    };

    for (int op = 0; op < 400; ++op) {
        if (action(rng) == 0) {
            graph.advance_relaxation();
            for (auto& [key, elem] : model)
                if (elem.age >= 0) ++elem.age;
        } else {
            int from = symbol(rng);
            int to = symbol(rng);
            graph.apply_spike(from, to, 1.0, 1.0);
            ModelElement& fwd = model[{from, to}];
            fwd.state += 1.0;
            fwd.age = 0;
            if (from != to) {
                ModelElement& rev = model[{to, from}];
                rev.state = rev.state > 1.0 ? rev.state - 1.0 : 0.0;
                rev.age = 0;
            }
        }
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) {
                CAPTURE(op);
                CAPTURE(i);
                CAPTURE(j);
                REQUIRE(graph.state(i, j) == model[{i, j}].state);
                REQUIRE(graph.effective_weight(i, j) == doctest::Approx(model_weight(i, j)));
            }
    }
}

TEST_CASE("graphs compare equal iff their history matches") {
    TransitionGraph a(AlphabetKind::Duration);
    TransitionGraph b(AlphabetKind::Duration);
    CHECK(a == b);

    a.apply_spike(1, 2, 1.0, 1.0);
    CHECK(a != b);
    b.apply_spike(1, 2, 1.0, 1.0);
    CHECK(a == b);

    a.advance_relaxation();
    CHECK(a != b);
    b.advance_relaxation();
    CHECK(a == b);
}

TEST_CASE("symbol indices are range checked") {
    TransitionGraph graph(AlphabetKind::Duration);
    CHECK_THROWS_AS(graph.apply_spike(-1, 0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(graph.apply_spike(0, 9, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)graph.effective_weight(9, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)graph.state(0, -1), std::invalid_argument);
}
