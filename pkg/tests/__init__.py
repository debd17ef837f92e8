import math

NO_SUCH_OPTION_ERROR_TEMPLATE = "no such option"
NO_SUCH_COMMAND_ERROR_TEMPLATE = "no such command"

MISSING_COMMAND_ERROR_TEMPLATE = "Error: Missing command."

# Cell (phi00, phi10, phi01, phi11) of the worked example and its exact fraction
GOLDEN_CELL = (0.1, 0.6, -0.3, -0.1)
GOLDEN_ALPHA = (17 * math.log(4) - 17 * math.log(7) + 15) / 9
