#ifndef VKD_GROUP_HPP
#define VKD_GROUP_HPP

#include "dp_bs.hpp"
#include "dp_cyclic.hpp"

namespace vkd {

inline bool is_trivial(const Word& w, const Presentation& p) {
    check_presentation(p);
    check_word(w, alphabet_size(p));
    if (const auto* c = std::get_if<CyclicProducts>(&p)) return is_trivial_cyclic(w, *c);
    LambdaMu r = lambda_mu(w, std::get<BaumslagSolitar>(p));
    return r.lambda && *r.lambda == 0;
}

// Minimal face count for either family.
inline Cost min_faces(const Word& w, const Presentation& p) {
    check_presentation(p);
    check_word(w, alphabet_size(p));
    if (const auto* c = std::get_if<CyclicProducts>(&p)) return mu2(w, *c);
    return mu3(w, std::get<BaumslagSolitar>(p));
}

inline Diagram minimal_diagram(const Word& w, const Presentation& p) {
    check_presentation(p);
    check_word(w, alphabet_size(p));
    if (const auto* c = std::get_if<CyclicProducts>(&p)) return minimal_diagram_cyclic(w, *c);
    return minimal_diagram_bs(w, std::get<BaumslagSolitar>(p));
}

} // namespace vkd

#endif
