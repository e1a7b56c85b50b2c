#pragma once

#include <memory>

#include "toricstab/fan.hpp"

namespace toric::corpus {

// Bundled example fans.  All validated, simplicial and complete.
std::shared_ptr<const Fan> projective_plane();          // P^2
std::shared_ptr<const Fan> projective_line();           // P^1
std::shared_ptr<const Fan> p1xp1();                     // P^1 x P^1
std::shared_ptr<const Fan> hirzebruch(int m);           // F_m
std::shared_ptr<const Fan> weighted_p112();             // P(1,1,2)
// P^1 x F_1 = P^1 x P_{P^1}(O + O(1)): six rays, eight max cones
std::shared_ptr<const Fan> p1_times_f1();

} // namespace toric::corpus
