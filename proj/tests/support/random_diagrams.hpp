#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "congrowth/diagram/diagram.hpp"
#include "congrowth/diagram/families.hpp"

namespace testing_support {

using congrowth::Word;
using congrowth::diagram::Diagram;
using congrowth::diagram::PresentationPtr;
using congrowth::diagram::Step;

/// Every step (cell, direction, offset) that applies to w.
std::vector<Step> applicable_steps(const PresentationPtr& p, const Word& w);

/// Applies a step to a word (no checking beyond bounds).
Word apply_step(const PresentationPtr& p, const Word& w, const Step& s);

/// A random walk of `length` steps from `top`, never letting the word grow
/// beyond max_width letters.
std::vector<Step> random_walk(const PresentationPtr& p, const Word& top, std::size_t length, std::size_t max_width,
                              std::mt19937_64& rng);

/// Inserts `count` dipoles (a step immediately followed by its mirror) at
/// random places of a sequential derivation.
std::vector<Step> insert_dipoles(const PresentationPtr& p, const Word& top, std::vector<Step> steps, int count,
                                 std::mt19937_64& rng);

/// Random swaps of adjacent independent steps, with offsets adjusted. The
/// result describes the same diagram.
std::vector<Step> shuffle_commuting(const PresentationPtr& p, std::vector<Step> steps, int swaps,
                                    std::mt19937_64& rng);

/// An unreduced ∘-product of `length` random generators (and inverses) of a
/// diagram group.
Diagram random_product(const congrowth::diagram::DiagramGroup& g, std::size_t length, std::mt19937_64& rng);
/// reduce(random_product(...)).
Diagram random_element(const congrowth::diagram::DiagramGroup& g, std::size_t length, std::mt19937_64& rng);

}  // namespace testing_support
