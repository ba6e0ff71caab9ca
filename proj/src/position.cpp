#include "mbd/position.hpp"

#include <algorithm>

#include "mbd/errors.hpp"

namespace mbd {

Player opponent(Player p) {
    return p == Player::Dominator ? Player::Staller : Player::Dominator;
}

std::string to_string(Player p) {
    return p == Player::Dominator ? "Dominator" : "Staller";
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::D: return "D";
        case Outcome::N: return "N";
        case Outcome::S: return "S";
    }
    return "?";
}

void Position::validate() const {
    auto check = [&](const std::vector<int>& set, const char* name) {
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (!graph.has_vertex(set[i]))
                throw InputError(std::string(name) + " claim out of range");
            if (i > 0 && set[i] <= set[i - 1])
                throw InputError(std::string(name) + " claims not sorted/unique");
        }
    };
    check(dominator, "dominator");
    check(staller, "staller");
    std::vector<int> both;
    std::set_intersection(dominator.begin(), dominator.end(), staller.begin(), staller.end(),
                          std::back_inserter(both));
    if (!both.empty()) throw InputError("dominator and staller claims overlap");
}

bool Position::is_claimed(int v) const {
    return std::binary_search(dominator.begin(), dominator.end(), v) ||
           std::binary_search(staller.begin(), staller.end(), v);
}

std::vector<int> Position::unclaimed() const {
    std::vector<int> out;
    for (int v = 0; v < graph.vertex_count(); ++v)
        if (!is_claimed(v)) out.push_back(v);
    return out;
}

Position make_position(Graph g, std::vector<int> dominator, std::vector<int> staller,
                       Player to_move) {
    Position p{std::move(g), std::move(dominator), std::move(staller), to_move};
    std::sort(p.dominator.begin(), p.dominator.end());
    p.dominator.erase(std::unique(p.dominator.begin(), p.dominator.end()), p.dominator.end());
    std::sort(p.staller.begin(), p.staller.end());
    p.staller.erase(std::unique(p.staller.begin(), p.staller.end()), p.staller.end());
    p.validate();
    return p;
}

} // namespace mbd
