#pragma once

#include "ghostlab/age.hpp"
#include "ghostlab/cochain.hpp"
#include "ghostlab/counting.hpp"
#include "ghostlab/ghosts.hpp"
#include "ghostlab/graph.hpp"
#include "ghostlab/io.hpp"
#include "ghostlab/level.hpp"
#include "ghostlab/modular.hpp"
#include "ghostlab/multigraphs.hpp"
#include "ghostlab/rational.hpp"
#include "ghostlab/singularity.hpp"
#include "ghostlab/tails.hpp"
#include "ghostlab/witnesses.hpp"
