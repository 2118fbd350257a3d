#pragma once

#include "antilap/asymptotics.hpp"
#include "antilap/coeff.hpp"
#include "antilap/errors.hpp"
#include "antilap/fd.hpp"
#include "antilap/identities.hpp"
#include "antilap/json_io.hpp"
#include "antilap/pairing.hpp"
#include "antilap/quadrature.hpp"
#include "antilap/rational.hpp"
#include "antilap/sampling.hpp"
#include "antilap/solutions.hpp"
#include "antilap/termalg.hpp"
#include "antilap/verify.hpp"
