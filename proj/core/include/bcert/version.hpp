#pragma once

#define BCERT_VERSION_MAJOR 1
#define BCERT_VERSION_MINOR 0
#define BCERT_VERSION_PATCH 0
#define BCERT_VERSION_STRING "1.0.0"
