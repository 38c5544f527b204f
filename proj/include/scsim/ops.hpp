#pragma once

#include "scsim/bitstream.hpp"

namespace scsim {

/// Composite operators: a correlation-manipulating front end feeding a
/// single gate. The FSM runs flushed so the operand values reach the gate
/// unchanged.

/// Synchronizer pair + OR: max(p_x, p_y).
Bitstream sync_max(const Bitstream& x, const Bitstream& y, int depth = 1);

/// Synchronizer pair + AND: min(p_x, p_y).
Bitstream sync_min(const Bitstream& x, const Bitstream& y, int depth = 1);

/// Desynchronizer + OR: min(1, p_x + p_y).
Bitstream desync_sat_add(const Bitstream& x, const Bitstream& y, int depth = 1);

enum class ExactOp { Max, Min, SatAdd, Mult, ScaledAdd, AbsDiff };

/// Real-arithmetic reference for operator error measurements; x and y must
/// be in [0, 1].
double exact_oracle(ExactOp op, double x, double y);

}  // namespace scsim
