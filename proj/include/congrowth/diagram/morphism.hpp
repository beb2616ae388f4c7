#pragma once

#include <vector>

#include "congrowth/diagram/diagram.hpp"

namespace congrowth::diagram {

/// Maps each letter to a word and each cell u -> v to a (ψ(u), ψ(v))-diagram
/// over the target presentation.
struct DiagramMorphism {
  PresentationPtr source;
  PresentationPtr target;
  std::vector<Word> letter_images;
  std::vector<Diagram> cell_images;

  /// Throws InputError on any shape mismatch.
  void validate() const;
  Word map_word(const Word& w) const;
};

DiagramMorphism identity_morphism(const PresentationPtr& p);

/// Replaces every edge e by ε(ψ(e)) and every cell by its image.
Diagram apply_morphism(const DiagramMorphism& psi, const Diagram& d);

}  // namespace congrowth::diagram
