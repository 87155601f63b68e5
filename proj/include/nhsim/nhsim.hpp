#ifndef NHSIM_NHSIM_HPP
#define NHSIM_NHSIM_HPP

#include "nhsim/cli.hpp"
#include "nhsim/control_plane.hpp"
#include "nhsim/errors.hpp"
#include "nhsim/event_queue.hpp"
#include "nhsim/host_model.hpp"
#include "nhsim/ids.hpp"
#include "nhsim/report.hpp"
#include "nhsim/rng.hpp"
#include "nhsim/scenario.hpp"
#include "nhsim/simulation.hpp"
#include "nhsim/stats.hpp"
#include "nhsim/time.hpp"
#include "nhsim/traffic.hpp"
#include "nhsim/user_plane.hpp"

#endif  // NHSIM_NHSIM_HPP
