#include "diamond/certificate.hpp"

namespace diamond {

const char* reason_name(Certificate::Reason r) {
    switch (r) {
        case Certificate::Reason::none: return "none";
        case Certificate::Reason::disconnected: return "disconnected";
        case Certificate::Reason::odd_cycle: return "odd_cycle";
        case Certificate::Reason::not_partial_cube: return "not_partial_cube";
        case Certificate::Reason::incoherent_cut: return "incoherent_cut";
    }
    return "unknown";
}

}  // namespace diamond
