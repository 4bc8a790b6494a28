#pragma once

#define DGCY_VERSION "0.1.0"
