#ifndef CASTKIT_COMPILE_HPP
#define CASTKIT_COMPILE_HPP

#include "castkit/cc.hpp"
#include "castkit/gtlc.hpp"

namespace castkit {

struct CompileOutput {
  CTerm term;
  Type type;
  CCMode mode;
};

// Cast-inserting compilation from the surface language into CC / CC'.
// Identity-shaped casts are inserted unconditionally, as the equations say.
// The source term must typecheck.
CompileOutput compile(const TypingCtx& ctx, const GTerm& m, Discipline d, CCMode mode);

}  // namespace castkit

#endif  // CASTKIT_COMPILE_HPP
