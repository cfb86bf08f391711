#pragma once

#include "rfbeats/analytics.hpp"
#include "rfbeats/correlations.hpp"
#include "rfbeats/dynamics.hpp"
#include "rfbeats/errors.hpp"
#include "rfbeats/model.hpp"
#include "rfbeats/numerics.hpp"
#include "rfbeats/signal.hpp"
#include "rfbeats/spectra.hpp"
