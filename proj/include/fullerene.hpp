#pragma once

#include "fullerene/errors.hpp"
#include "fullerene/plane_graph.hpp"
#include "fullerene/fullerene.hpp"
#include "fullerene/spiral.hpp"
#include "fullerene/separation.hpp"
#include "fullerene/generate.hpp"
#include "fullerene/goldberg.hpp"
#include "fullerene/patch.hpp"
#include "fullerene/cap.hpp"
#include "fullerene/codec.hpp"
