#include "covkit/size.hpp"

namespace covkit {

namespace {

// Accumulates integer terms plus terms of the form d·log₂(m) while keeping
// the ceiling exact: ceil(A + Σ dᵢ·log₂ mᵢ) = A + ceil(log₂ Π mᵢ^dᵢ).
class LogSum {
 public:
  void add_integer(const Int& x) {
    additive_ += x;
    real_ += x.get_d();
  }
  void add_log(std::size_t d, const Int& m) {
    real_ += static_cast<double>(d) * log2_of(m);
    Int power;
    mpz_pow_ui(power.get_mpz_t(), m.get_mpz_t(), d);
    product_ *= power;
  }
  void add_vector(const IntVector& v) { add_log(v.dim(), v.norm_inf() + 1); }

  BinarySize result() const { return {real_, additive_ + Int(ceil_log2(product_))}; }

 private:
  double real_ = 0;
  Int additive_ = 0;
  Int product_ = 1;
};

struct ModelSizes {
  std::size_t dimension;
  std::size_t count;
  Int unary;
  LogSum binary;
};

ModelSizes measure(const Vas& vas) {
  ModelSizes out{vas.dim(), vas.vectors().size(), 0, {}};
  for (const auto& v : vas.vectors()) {
    out.unary += v.norm1();
    out.binary.add_vector(v);
  }
  return out;
}

ModelSizes measure(const Vass& vass) {
  ModelSizes out{vass.dim(), vass.transitions().size(), Int(vass.states().size()), {}};
  out.binary.add_integer(Int(vass.states().size()));
  for (const auto& t : vass.transitions()) {
    out.unary += t.update.norm1();
    out.binary.add_vector(t.update);
  }
  return out;
}

ModelSizes measure(const PetriNet& net) {
  const Int nodes(net.places().size() + net.transitions().size());
  ModelSizes out{net.dim(), net.transitions().size(), nodes, {}};
  out.binary.add_integer(nodes);
  // Each flow value is a scalar, i.e. a 1-dimensional vector.
  for (std::size_t t = 0; t < net.transitions().size(); ++t) {
    for (std::size_t p = 0; p < net.dim(); ++p) {
      for (const Int& w : {net.input(t)[p], net.output(t)[p]}) {
        out.unary += w;
        out.binary.add_log(1, w + 1);
      }
    }
  }
  return out;
}

ModelSizes measure_any(const Model& model) {
  return std::visit([](const auto& m) { return measure(m); }, model);
}

const IntVector& counters_of(const Configuration& c) {
  if (const auto* v = std::get_if<IntVector>(&c)) return *v;
  return std::get<VassConfig>(c).counters;
}

}  // namespace

Int unary_size(const IntVector& v) { return v.norm1(); }

BinarySize binary_size(const IntVector& v) {
  LogSum sum;
  sum.add_vector(v);
  return sum.result();
}

SizeReport size_report(const Model& model) {
  ModelSizes sizes = measure_any(model);
  SizeReport report;
  report.dimension = sizes.dimension;
  report.vector_count = sizes.count;
  report.unary_model_size = sizes.unary;
  report.binary_model_size = sizes.binary.result();
  return report;
}

SizeReport size_report(const CoverInstance& instance) {
  check_instance(instance);
  ModelSizes sizes = measure_any(instance.model);
  SizeReport report;
  report.dimension = sizes.dimension;
  report.vector_count = sizes.count;
  report.unary_model_size = sizes.unary;
  report.binary_model_size = sizes.binary.result();

  const IntVector& s = counters_of(instance.source);
  const IntVector& t = counters_of(instance.target);
  report.unary_instance_size = sizes.unary + s.norm1() + t.norm1();
  LogSum total = sizes.binary;
  total.add_log(sizes.dimension, s.norm_inf() + 1);
  total.add_log(sizes.dimension, t.norm_inf() + 1);
  report.binary_instance_size = total.result();
  return report;
}

}  // namespace covkit
