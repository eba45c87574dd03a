#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ldpbandit/harness.hpp"

namespace ldpb {

/// Panel tags understood by `reproduce`.
std::span<const std::string_view> figure_tags();

/// Experiment for one reproduced panel.
///
///   fig1a/b  Bernoulli instance, eps 2.0 / 0.2, ucb1 + ldp-ucb-l + ldp-ucb-b
///   fig1c/d  Bernoulli instance, ldp-ucb-l / ldp-ucb-b at eps 2, 1, 0.5, 0.2
///   fig1e/f  mixed instance, eps 2.0 / 0.2, ucb1 + ldp-ucb-l + ldp-ucb-b
///   fig2a    Gaussian instance, eps 0.5, ucb1-s + ldp-ucb-ls + ldp-ucb-bs
///   fig2b/c  Gaussian instance, ldp-ucb-ls / ldp-ucb-bs at eps 2, 1, 0.5, 0.2
///
/// Throws std::invalid_argument on an unknown tag.
ExperimentConfig figure_config(std::string_view tag, std::uint64_t horizon,
                               std::uint32_t trials, std::uint64_t seed);

}  // namespace ldpb
