#include "toricstab/corpus.hpp"

namespace toric::corpus {

namespace {

IVec iv(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

std::shared_ptr<const Fan> make(int rank, std::vector<IVec> rays,
                                std::vector<std::vector<int>> cones) {
    Fan f;
    f.rank = rank;
    f.rays = std::move(rays);
    f.max_cones = std::move(cones);
    return std::make_shared<const Fan>(validate_fan(std::move(f)));
}

} // namespace

std::shared_ptr<const Fan> projective_plane() {
    static auto fan = make(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})},
                           {{0, 1}, {1, 2}, {2, 0}});
    return fan;
}

std::shared_ptr<const Fan> projective_line() {
    static auto fan = make(1, {iv({1}), iv({-1})}, {{0}, {1}});
    return fan;
}

std::shared_ptr<const Fan> p1xp1() {
    static auto fan = make(2, {iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1})},
                           {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    return fan;
}

std::shared_ptr<const Fan> hirzebruch(int m) {
    // rays: fiber (1,0), the (-m)-curve (0,1), fiber (-1,m), the (+m)-section (0,-1)
    return make(2, {iv({1, 0}), iv({0, 1}), iv({-1, m}), iv({0, -1})},
                {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

std::shared_ptr<const Fan> weighted_p112() {
    static auto fan = make(2, {iv({1, 0}), iv({0, 1}), iv({-1, -2})},
                           {{0, 1}, {1, 2}, {2, 0}});
    return fan;
}

std::shared_ptr<const Fan> p1_times_f1() {
    static auto fan = make(
        3,
        {iv({0, 1, 0}), iv({1, 0, 0}), iv({0, 0, -1}), iv({0, 0, 1}), iv({0, -1, 1}),
         iv({-1, 0, 0})},
        {{0, 1, 2}, {0, 1, 3}, {1, 2, 4}, {1, 3, 4}, {0, 2, 5}, {0, 3, 5}, {2, 4, 5}, {3, 4, 5}});
    return fan;
}

} // namespace toric::corpus
