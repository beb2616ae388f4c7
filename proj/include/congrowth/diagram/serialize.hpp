#pragma once

// JSON form of a diagram:
//   {"top": "ac", "bottom": "ac", "cells": 3, "steps": [[cell, dir, offset], ...]}
// with dir = 1 for a cell and -1 for its mirror image, steps in level form.

#include <json.hpp>

#include "congrowth/diagram/conjugacy.hpp"
#include "congrowth/diagram/diagram.hpp"

namespace congrowth::diagram {

nlohmann::json to_json(const Diagram& d);
/// Replays the steps; the result is renormalized, so any valid derivation is
/// accepted.
Diagram diagram_from_json(const nlohmann::json& j, const PresentationPtr& p);

nlohmann::json to_json(const DiagramConjKey& key);

}  // namespace congrowth::diagram
