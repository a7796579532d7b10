#pragma once

// Reversible embedding of blink statistics into sampled biosignals via
// difference expansion, with bit-exact carrier restoration and payload
// cross-validation.

#include "wmeog/bitstring.hpp"
#include "wmeog/de_codec.hpp"
#include "wmeog/errors.hpp"
#include "wmeog/features.hpp"
#include "wmeog/metrics.hpp"
#include "wmeog/pipeline.hpp"
#include "wmeog/signal.hpp"
#include "wmeog/signal_io.hpp"
#include "wmeog/watermark.hpp"
