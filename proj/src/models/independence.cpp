#include "bigcp/errors.hpp"
#include "bigcp/models.hpp"

namespace bigcp {

IndependenceModel::IndependenceModel(std::vector<Complex> vertex_weights)
    : multivariate_(true), vertex_weights_(std::move(vertex_weights)) {}

std::vector<Complex> IndependenceModel::weights(const Pattern& h, int m) const {
  std::vector<Complex> out(m + 1);
  const int size = h.size();
  if (h.graph.num_edges() > 0 || size > m) return out;
  Complex w = 1.0;
  if (multivariate_) {
    for (int v = 0; v < size; ++v) {
      const Color c = h.graph.vertex_color(v);
      if (c < 0 || c >= static_cast<Color>(vertex_weights_.size()))
        throw ContractError("invalid-input", "vertex color without a weight");
      w *= vertex_weights_[c];
    }
  }
  out[size] = w;
  return out;
}

}  // namespace bigcp
