#pragma once

#include <vector>

namespace diamond {

// Rejection certificate for the embedding pipeline. Witness layout by reason:
//   disconnected     -> { an unreachable vertex } (empty for the 0-vertex graph)
//   odd_cycle        -> the cycle's vertices in walk order
//   not_partial_cube -> { u, v } whose Hamming and graph distances differ
//   incoherent_cut   -> { class id, p1, q1, p2, q2 }: two edges of one class
//                       whose white endpoints p1, p2 lie in different semicubes
struct Certificate {
    enum class Reason { none, disconnected, odd_cycle, not_partial_cube, incoherent_cut };

    Reason reason = Reason::none;
    std::vector<int> witness;
};

const char* reason_name(Certificate::Reason r);

}  // namespace diamond
