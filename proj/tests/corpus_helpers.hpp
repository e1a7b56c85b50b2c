#pragma once

// shared helpers for the unit and acceptance suites

#include <random>

#include "toricstab/corpus.hpp"
#include "toricstab/divisor.hpp"
#include "toricstab/flag.hpp"

namespace toric {

inline IVec iv(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline QVec qv(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline std::vector<std::shared_ptr<const Fan>> corpus_fans() {
    return {corpus::projective_plane(), corpus::p1xp1(),         corpus::hirzebruch(1),
            corpus::hirzebruch(2),      corpus::weighted_p112(), corpus::p1_times_f1()};
}

inline std::vector<std::shared_ptr<const Fan>> corpus_surface_fans() {
    return {corpus::projective_plane(), corpus::p1xp1(), corpus::hirzebruch(1),
            corpus::hirzebruch(2), corpus::weighted_p112()};
}

inline ToricDivisor random_big_divisor(std::shared_ptr<const Fan> fan, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-2, 4);
    std::uniform_int_distribution<int> den(1, 3);
    while (true) {
        QVec coeffs(fan->rays.size());
        for (auto& c : coeffs) c = make_rat(num(rng), den(rng));
        ToricDivisor d = make_divisor(fan, coeffs);
        if (is_big(d)) return d;
    }
}

inline FlagChain random_complete_flag(const Fan& fan, std::mt19937& rng) {
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int attempt = 0; attempt < 500; ++attempt) {
        std::vector<IVec> seeds;
        for (int k = 0; k < fan.rank; ++k) {
            IVec v(fan.rank);
            bool zero = true;
            for (int j = 0; j < fan.rank; ++j) {
                v[j] = coord(rng);
                if (v[j] != 0) zero = false;
            }
            if (zero) v[0] = 1;
            seeds.push_back(v);
        }
        try {
            return build_flag_chain(fan, seeds);
        } catch (const Error&) {
            continue;
        }
    }
    throw std::logic_error("could not sample a complete flag");
}

} // namespace toric
