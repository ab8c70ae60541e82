#pragma once

// Worked products at n = 8 and their expected values.

#include "diagalg/diagalg.hpp"

namespace examples {

using namespace diagalg;

inline const LabelSet& binary() {
    static const LabelSet X{"0", "1"};
    return X;
}

inline std::vector<Pair> pairs_a() {
    return {{Lnode(1), Lnode(2)}, {Lnode(3), Lnode(8)}, {Lnode(4), Lnode(5)}, {Lnode(6), Lnode(7)}, {Rnode(1), Rnode(2)},
            {Rnode(4), Rnode(5)}, {Rnode(6), Rnode(7)}, {Tpt(1), Rnode(8)},   {Tpt(2), Rnode(3)}};
}
inline std::vector<Pair> pairs_b() {
    return {{Lnode(4), Lnode(7)}, {Lnode(5), Lnode(6)}, {Rnode(3), Rnode(6)}, {Rnode(4), Rnode(5)},
            {Rnode(7), Rnode(8)}, {Lnode(1), Tpt(1)},   {Lnode(2), Tpt(2)},   {Rnode(2), Tpt(3)},
            {Rnode(1), Tpt(4)},   {Lnode(8), Bpt(1)},   {Lnode(3), Bpt(2)}};
}
inline std::vector<Pair> pairs_c() {
    return {{Lnode(1), Lnode(2)}, {Lnode(4), Rnode(3)}, {Lnode(5), Lnode(6)}, {Lnode(7), Lnode(8)},
            {Rnode(4), Rnode(5)}, {Lnode(3), Tpt(1)},   {Rnode(2), Tpt(2)},   {Rnode(1), Tpt(3)},
            {Rnode(6), Bpt(1)},   {Rnode(7), Bpt(2)},   {Rnode(8), Bpt(3)}};
}
inline std::vector<Pair> pairs_d() {
    return {{Lnode(3), Rnode(1)}, {Lnode(4), Rnode(2)}, {Lnode(5), Rnode(7)}, {Rnode(3), Rnode(4)},
            {Rnode(5), Rnode(6)}, {Lnode(1), Tpt(1)},   {Lnode(2), Tpt(2)},   {Lnode(8), Bpt(1)},
            {Lnode(7), Bpt(2)},   {Lnode(6), Bpt(3)},   {Rnode(8), Bpt(4)}};
}

inline std::pair<Diagram, Diagram> label_first() {
    return {Diagram::make(8, binary(), {"0", "1"}, {}, pairs_a()),
            Diagram::make(8, binary(), {"1", "0", "1", "0"}, {"1", "1"}, pairs_b())};
}
inline std::pair<Diagram, Diagram> label_second() {
    return {Diagram::make(8, binary(), {"0", "1", "0"}, {"0", "1", "0"}, pairs_c()),
            Diagram::make(8, binary(), {"1", "1"}, {"1", "0", "0", "1"}, pairs_d())};
}
inline std::pair<GhostDiagram, GhostDiagram> ghost_first() {
    return {GhostDiagram::make(8, {1, 0, 1}, {0}, pairs_a(), 2, 0),
            GhostDiagram::make(8, {0, 0, 0, 0, 0}, {0, 1, 1}, pairs_b(), 4, 2)};
}
inline std::pair<GhostDiagram, GhostDiagram> ghost_second() {
    return {GhostDiagram::make(8, {1, 0, 0, 0}, {1, 0, 0, 0}, pairs_c(), 3, 3),
            GhostDiagram::make(8, {0, 1, 1}, {0, 0, 1, 0, 1}, pairs_d(), 2, 4)};
}

inline std::pair<BlobDiagram, BlobDiagram> blob_six() {
    return {BlobDiagram(6,
                        {{Lnode(1), Rnode(3)}, {Lnode(2), Lnode(3)}, {Lnode(4), Rnode(4)}, {Lnode(5), Lnode(6)},
                         {Rnode(1), Rnode(2)}, {Rnode(5), Rnode(6)}},
                        {{Lnode(1), "t"}, {Lnode(4), "b"}, {Rnode(1), "t"}, {Rnode(5), "b"}}),
            BlobDiagram(6,
                        {{Lnode(1), Lnode(2)}, {Lnode(3), Lnode(4)}, {Lnode(5), Rnode(5)}, {Lnode(6), Rnode(6)},
                         {Rnode(1), Rnode(2)}, {Rnode(3), Rnode(4)}},
                        {{Lnode(3), "t"}, {Lnode(5), "t"}, {Lnode(6), "b"}, {Rnode(1), "t"}})};
}
inline std::pair<BlobDiagram, BlobDiagram> blob_two() {
    return {BlobDiagram(2, {{Lnode(1), Lnode(2)}, {Rnode(1), Rnode(2)}}, {{Rnode(1), "tb"}}),
            BlobDiagram(2, {{Lnode(1), Lnode(2)}, {Rnode(1), Rnode(2)}}, {{Lnode(1), "t"}})};
}

inline const char* label_first_coeff = "b*aup[1,0]*g[0,1]*g[1,1]";
inline const char* label_first_result =
    "D(n=8;X=0,1;top=1,0;bottom=;pairs=(L1,L2);(L3,L8);(L4,L5);(L6,L7);(R8,R7);(R6,R3);(R5,R4);(R2,T1);(R1,T2))";
inline const char* label_second_coeff = "aup[0,1]*aup[1,1]*ddn[0,0]*ddn[0,1]*ddn[1,0]";
inline const char* label_second_result =
    "D(n=8;X=0,1;top=0;bottom=1;pairs=(L1,L2);(L3,T1);(L4,R1);(L5,L6);(L7,L8);(B1,R8);(R7,R2);(R6,R5);(R4,R3))";
inline const char* ghost_first_coeff = "b*a1*g12*g3";
inline const char* ghost_second_coeff = "a2*a3*d1*d2*d3";
inline const char* blob_six_coeff = "k*sa1*sa2*sd2";
inline const char* blob_six_result = "S(n=6;pairs=(L1,R5);(L2,L3);(L4,R6);(L5,L6);(R4,R3);(R2,R1);dec=1:t;3:b;6:t)";
inline const char* blob_two_coeff = "k*sa2";
inline const char* blob_two_odd_rule_coeff = "k*sa1";

}  // namespace examples
