#pragma once

#include <stdexcept>
#include <string>

namespace mhg {

// Base class for every recoverable error raised by the library. Callers that
// only care about "this input was bad" can catch this; tests catch the
// concrete subclasses.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define MHG_DEFINE_ERROR(NAME)                                 \
  class NAME : public Error {                                  \
   public:                                                     \
    explicit NAME(const std::string& what) : Error(what) {}    \
  }

// SMILES / molecule layer
MHG_DEFINE_ERROR(SyntaxError);
MHG_DEFINE_ERROR(UnsupportedFeature);
MHG_DEFINE_ERROR(DisconnectedInput);
MHG_DEFINE_ERROR(UnsupportedElement);
MHG_DEFINE_ERROR(InvalidMolecule);

// Hypergraph / grammar layer
MHG_DEFINE_ERROR(EmptyInput);
MHG_DEFINE_ERROR(NonterminalRemaining);
MHG_DEFINE_ERROR(EmptyCorpus);
MHG_DEFINE_ERROR(NoMatch);
MHG_DEFINE_ERROR(EmptyFrontier);
MHG_DEFINE_ERROR(IncompleteDerivation);
MHG_DEFINE_ERROR(ParseError);  // molecule does not parse under a frozen grammar
MHG_DEFINE_ERROR(InvalidTarget);

// Numerics / model layer
MHG_DEFINE_ERROR(ShapeMismatch);
MHG_DEFINE_ERROR(MaskAllFalse);
MHG_DEFINE_ERROR(CheckpointError);

// Training / downstream layer
MHG_DEFINE_ERROR(UnparseableCorpus);
MHG_DEFINE_ERROR(NonFiniteLoss);
MHG_DEFINE_ERROR(DatasetTooSmall);
MHG_DEFINE_ERROR(DegenerateDesign);
MHG_DEFINE_ERROR(ConstantTarget);
MHG_DEFINE_ERROR(IoError);

#undef MHG_DEFINE_ERROR

}  // namespace mhg
