#pragma once

#include <random>
#include <string>

#include "genii/dataset.hpp"
#include "genii/gene.hpp"

namespace genii::testing {

using TestRng = std::mt19937_64;

// A gene that passes validation. With `renderable` the generator stays inside
// the combinations the pipeline can always draw (no data-driven paths, no
// corner radii that may exceed a mark side).
Gene random_gene(TestRng& rng, bool renderable);

Dataset random_dataset(TestRng& rng, std::size_t min_categories, std::size_t max_categories);

std::string random_bytes(TestRng& rng, std::size_t max_len);

// Documents that are close to valid genes, with single fields damaged.
std::string mutated_gene_text(TestRng& rng);

}  // namespace genii::testing
