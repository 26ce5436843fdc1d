// Maximal extractions of the two models, transcribed curve by curve from the
// drawn dual graphs. Self-intersections and circle labels come from the global
// drawings; coefficients are read off the local pictures the chains are made of.

#include "golden_data.hpp"

namespace logenr::golden {
namespace {

// Boundary curves first; the enumeration relies on C1, C2 being vertices 0 and 1.
constexpr VertexRow kA26Vertices[] = {
    {"C1", -14, "6/7", 'B', "C1"},
    {"C2", -14, "6/7", 'B', "C2"},
    // Z2(1,1) chain on C1
    {"a1", -3, "3/7", 'E', nullptr},
    {"a2", -2, "2/7", 'E', nullptr},
    {"a3", -2, "1/7", 'E', nullptr},
    {"c1", -1, "0", 'O', "1"},
    // Z3(1,2) chain on C1
    {"c2", -1, "0", 'O', "2"},
    {"b1", -2, "1/7", 'E', nullptr},
    {"b2", -2, "2/7", 'E', nullptr},
    {"b3", -3, "3/7", 'E', nullptr},
    {"c3", -1, "0", 'O', "3"},
    {"b4", -4, "4/7", 'E', nullptr},
    {"b5", -2, "2/7", 'E', nullptr},
    // the crossing point of C1 and C2
    {"c4", -1, "0", 'O', "4"},
    {"p1", -2, "1/7", 'E', nullptr},
    {"p2", -2, "2/7", 'E', nullptr},
    {"p3", -3, "3/7", 'E', nullptr},
    {"c5", -1, "0", 'O', "5"},
    {"p4", -4, "4/7", 'E', nullptr},
    {"p5", -2, "2/7", 'E', nullptr},
    {"c6", -1, "0", 'O', "6"},
    {"p6", -7, "5/7", 'E', nullptr},
    {"c7", -1, "0", 'O', "7"},
    {"p7", -2, "2/7", 'E', nullptr},
    {"p8", -4, "4/7", 'E', nullptr},
    {"c8", -1, "0", 'O', "8"},
    {"p9", -3, "3/7", 'E', nullptr},
    {"p10", -2, "2/7", 'E', nullptr},
    {"p11", -2, "1/7", 'E', nullptr},
    {"c9", -1, "0", 'O', "9"},
    // the node of C2
    {"c10", -1, "0", 'O', "10"},
    {"q1", -2, "1/7", 'E', nullptr},
    {"q2", -2, "2/7", 'E', nullptr},
    {"q3", -3, "3/7", 'E', nullptr},
    {"c11", -1, "0", 'O', "11"},
    {"q4", -4, "4/7", 'E', nullptr},
    {"q5", -2, "2/7", 'E', nullptr},
    {"c12", -1, "0", 'O', "12"},
    {"q6", -7, "5/7", 'E', nullptr},
    {"c13", -1, "0", 'O', "13"},
    {"q7", -2, "2/7", 'E', nullptr},
    {"q8", -4, "4/7", 'E', nullptr},
    {"c14", -1, "0", 'O', "14"},
    {"q9", -3, "3/7", 'E', nullptr},
    {"q10", -2, "2/7", 'E', nullptr},
    {"q11", -2, "1/7", 'E', nullptr},
    {"c15", -1, "0", 'O', "15"},
};

constexpr const char* kA26Paths[] = {
    "a1 a2 a3 c1 C1",
    "C1 c2 b1 b2 b3 c3 b4 b5",
    "C1 c4 p1 p2 p3 c5 p4 p5 c6 p6 c7 p7 p8 c8 p9 p10 p11 c9 C2",
    "C2 c10 q1 q2 q3 c11 q4 q5 c12 q6 c13 q7 q8 c14 q9 q10 q11 c15 C2",
};

constexpr VertexRow kI22Vertices[] = {
    {"C1", -14, "6/7", 'B', "C1"},
    {"C2", -14, "6/7", 'B', "C2"},
    // Z2(1,1) chain on C1
    {"a1", -3, "3/7", 'E', nullptr},
    {"a2", -2, "2/7", 'E', nullptr},
    {"a3", -2, "1/7", 'E', nullptr},
    {"c1", -1, "0", 'O', "1"},
    // Z3(1,2) chain on C2
    {"c2", -1, "0", 'O', "2"},
    {"b1", -2, "1/7", 'E', nullptr},
    {"b2", -2, "2/7", 'E', nullptr},
    {"b3", -3, "3/7", 'E', nullptr},
    {"c3", -1, "0", 'O', "3"},
    {"b4", -4, "4/7", 'E', nullptr},
    {"b5", -2, "2/7", 'E', nullptr},
    // first crossing point of C1 and C2
    {"c4", -1, "0", 'O', "4"},
    {"p1", -2, "1/7", 'E', nullptr},
    {"p2", -2, "2/7", 'E', nullptr},
    {"p3", -3, "3/7", 'E', nullptr},
    {"c5", -1, "0", 'O', "5"},
    {"p4", -4, "4/7", 'E', nullptr},
    {"p5", -2, "2/7", 'E', nullptr},
    {"c6", -1, "0", 'O', "6"},
    {"p6", -7, "5/7", 'E', nullptr},
    {"c7", -1, "0", 'O', "7"},
    {"p7", -2, "2/7", 'E', nullptr},
    {"p8", -4, "4/7", 'E', nullptr},
    {"c8", -1, "0", 'O', "8"},
    {"p9", -3, "3/7", 'E', nullptr},
    {"p10", -2, "2/7", 'E', nullptr},
    {"p11", -2, "1/7", 'E', nullptr},
    {"c9", -1, "0", 'O', "9"},
    // second crossing point
    {"c10", -1, "0", 'O', "10"},
    {"q1", -2, "1/7", 'E', nullptr},
    {"q2", -2, "2/7", 'E', nullptr},
    {"q3", -3, "3/7", 'E', nullptr},
    {"c11", -1, "0", 'O', "11"},
    {"q4", -4, "4/7", 'E', nullptr},
    {"q5", -2, "2/7", 'E', nullptr},
    {"c12", -1, "0", 'O', "12"},
    {"q6", -7, "5/7", 'E', nullptr},
    {"c13", -1, "0", 'O', "13"},
    {"q7", -2, "2/7", 'E', nullptr},
    {"q8", -4, "4/7", 'E', nullptr},
    {"c14", -1, "0", 'O', "14"},
    {"q9", -3, "3/7", 'E', nullptr},
    {"q10", -2, "2/7", 'E', nullptr},
    {"q11", -2, "1/7", 'E', nullptr},
    {"c15", -1, "0", 'O', "15"},
};

constexpr const char* kI22Paths[] = {
    "a1 a2 a3 c1 C1",
    "C2 c2 b1 b2 b3 c3 b4 b5",
    "C1 c4 p1 p2 p3 c5 p4 p5 c6 p6 c7 p7 p8 c8 p9 p10 p11 c9 C2",
    "C1 c10 q1 q2 q3 c11 q4 q5 c12 q6 c13 q7 q8 c14 q9 q10 q11 c15 C2",
};

}  // namespace

Table table(bool a26) {
    if (a26) return {kA26Vertices, kA26Paths};
    return {kI22Vertices, kI22Paths};
}

}  // namespace logenr::golden
