#pragma once

#include "csmanet/des/scenario.hpp"
#include "csmanet/des/trace.hpp"

namespace csmanet::des {

// Packet-level IEEE 802.11 DCF simulation over the scenario topology.
//
// Model summary:
//  - saturated sources, per-node binary exponential backoff with
//    freeze-on-busy and DIFS deference; slot boundaries realign at each
//    DIFS expiry, so nodes sharing a busy period count in lockstep;
//  - carrier sensing compares the summed received power from every
//    in-flight transmission (fresh Rayleigh-faded mark per frame, d^-4 path
//    loss, plus the noise floor) against the configured threshold;
//  - a frame is received iff no overlapping foreign transmission is
//    individually audible at the destination under the same busy-detection
//    threshold; there is no capture;
//  - the outcome of an attempt is known to its source when the decisive
//    frame ends, so a collided exchange occupies exactly frame + DIFS;
//  - RTS/CTS-phase failures count against retry_limit, data-phase failures
//    in RTS mode against long_retry_limit; the contention window doubles on
//    every failure up to the maximum backoff stage.
//
// Propagation delay is zero and control frames radiate like data frames.
DesTrace run_des(const Scenario& scenario);

}  // namespace csmanet::des
