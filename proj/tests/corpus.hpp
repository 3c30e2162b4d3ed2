#ifndef BILCERT_TESTS_CORPUS_HPP
#define BILCERT_TESTS_CORPUS_HPP

#include <string>
#include <utility>
#include <vector>

#include "bilcert/graph.hpp"

namespace corpus {

// Fixed inputs used across the test suites. Edge ids follow input order.
inline const char* C4 = "1 3\n3 2\n2 4\n4 1\n";
inline const char* C6 = "1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n";
inline const char* C8 = "1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 1\n";
inline const char* K23 = "1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n";
inline const char* K24 = "1 3\n1 4\n1 5\n1 6\n2 3\n2 4\n2 5\n2 6\n";
inline const char* K33 = "1 4\n1 5\n1 6\n2 4\n2 5\n2 6\n3 4\n3 5\n3 6\n";
inline const char* GRID_2X3 = "1 2\n2 3\n4 5\n5 6\n1 4\n2 5\n3 6\n";
inline const char* TWO_C4 = "1 3\n3 2\n2 4\n4 1\n5 7\n7 6\n6 8\n8 5\n";
inline const char* C4_PENDANT = "1 3\n3 2\n2 4\n4 1\n4 5\n";
inline const char* PATH3 = "1 2\n2 3\n";
inline const char* TRIANGLE = "1 2\n2 3\n3 1\n";
// Ladder of five vertical edges {i, i+5} with connectors {i, i+6}.
inline const char* LADDER5 = "1 6\n2 7\n3 8\n4 9\n5 10\n1 7\n2 8\n3 9\n4 10\n";

inline bilcert::Graph graph(const char* text) { return bilcert::parse_graph(text); }

// The acceptance corpus, in a fixed order.
inline std::vector<std::pair<std::string, const char*>> acceptance_corpus() {
    return {
        {"C4", C4},           {"C6", C6},
        {"C8", C8},           {"K23", K23},
        {"K24", K24},         {"K33", K33},
        {"grid2x3", GRID_2X3}, {"two_C4", TWO_C4},
        {"C4_pendant", C4_PENDANT},
    };
}

}  // namespace corpus

#endif
