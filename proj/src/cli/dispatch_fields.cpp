// Checker bodies for the simple-extension backends.

#include "dispatch_impl.hpp"

namespace spanbound::cli::detail {

#define SPANBOUND_INSTANTIATE(R)                                                                                         \
  template CheckOutcome run_typed<R>(const BackendPtr<R>&, const std::string&, const NamedSets&, const CheckParams&); \
  template NamedSets sample_typed<R>(const BackendPtr<R>&, const std::string&, Rng&, const SizeBudget&, std::size_t);

SPANBOUND_INSTANTIATE(FiniteField)
SPANBOUND_INSTANTIATE(RationalExtension)
SPANBOUND_INSTANTIATE(ModularFunctionExtension)
SPANBOUND_INSTANTIATE(RationalFunctionExtension)

}  // namespace spanbound::cli::detail
