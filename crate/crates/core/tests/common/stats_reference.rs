// Generated by gen_stats_reference.py with scipy 1.15.3. Do not edit.

pub struct PairedCase { pub x: &'static [f64], pub y: &'static [f64], pub t: f64, pub df: f64, pub p: f64 }
pub struct AnovaCase { pub groups: &'static [&'static [f64]], pub f: f64, pub df1: f64, pub df2: f64, pub p: f64 }
pub struct ShapiroCase { pub x: &'static [f64], pub w: f64, pub p: f64 }

pub const PAIRED: &[PairedCase] = &[
    PairedCase { x: &[17.742, 16.973, 16.413, 24.091, 16.912, 21.947, 21.905, 20.91, 20.156, 21.04, 18.086, 23.72, 17.337, 16.732, 26.016, 20.818, 15.99, 23.014], y: &[16.057, 16.71, 14.576, 24.014, 16.934, 24.016, 21.085, 21.321, 21.714, 20.192, 19.523, 24.948, 18.575, 17.141, 25.895, 24.236, 15.951, 22.642], t: -1.0189509160978674, df: 17.0, p: 0.32250921100552077 },
    PairedCase { x: &[22.754, 21.36, 22.858, 21.56, 15.287, 22.172, 13.782, 19.708, 20.959, 21.478, 18.431, 20.771, 24.34, 15.415, 21.793, 17.479, 22.904, 21.145, 19.287, 23.942, 20.485, 15.749, 14.858, 19.526, 19.695, 22.246], y: &[21.336, 19.655, 21.873, 20.047, 13.997, 21.06, 12.4, 18.159, 19.531, 19.876, 16.918, 19.611, 22.643, 14.281, 20.286, 15.926, 21.568, 19.883, 17.838, 21.967, 19.09, 14.268, 13.476, 18.178, 18.082, 20.809], t: 34.996250751562414, df: 25.0, p: 9.26196620631969e-23 },
    PairedCase { x: &[18.183, 22.348, 19.32, 20.827, 19.114, 22.851, 20.655, 22.659, 18.751, 18.168, 18.087, 18.225, 23.896, 22.704, 23.397, 23.999, 17.468, 20.759, 23.55], y: &[19.9, 23.448, 18.709, 21.513, 19.728, 23.798, 21.731, 22.93, 20.838, 19.677, 19.286, 18.815, 25.736, 23.869, 24.652, 25.342, 18.335, 22.557, 25.735], t: -7.371279485634706, df: 18.0, p: 7.704408875080039e-07 },
    PairedCase { x: &[22.75, 22.312, 17.834], y: &[21.681, 19.983, 18.093], t: 1.4003817626631336, df: 2.0, p: 0.2963766585493238 },
    PairedCase { x: &[20.41, 20.497, 16.451, 19.534, 20.251, 20.857, 23.984, 17.959, 20.093, 19.286, 21.091, 20.837, 23.72, 21.463, 20.719, 20.916, 14.973, 14.395, 20.7, 16.936, 14.367, 21.732], y: &[21.109, 21.279, 19.377, 21.912, 22.9, 23.234, 25.586, 17.725, 21.338, 19.224, 22.501, 20.482, 25.214, 20.274, 21.841, 19.835, 14.453, 13.38, 22.681, 19.982, 13.668, 21.436], t: -2.8113177650428294, df: 21.0, p: 0.0104606545498587 },
    PairedCase { x: &[21.14, 22.698, 15.891, 19.821, 19.947, 18.491, 17.517, 18.969, 24.243, 24.556, 16.642, 23.397, 20.581, 20.304, 19.907, 21.331, 24.361, 21.425, 20.058, 27.868, 18.327, 14.875, 21.129, 16.636], y: &[23.543, 23.43, 16.775, 16.912, 18.288, 15.613, 15.421, 17.156, 23.054, 26.767, 15.784, 24.103, 20.937, 18.884, 22.27, 20.576, 27.623, 20.342, 18.682, 30.11, 15.45, 14.346, 23.333, 15.637], t: 0.5483803014281756, df: 23.0, p: 0.5887146546583621 },
    PairedCase { x: &[22.861, 15.973, 18.217, 19.695, 23.686, 19.707, 13.312, 21.006, 22.384, 19.766, 22.699], y: &[23.813, 16.944, 12.492, 18.67, 24.362, 18.876, 10.042, 23.462, 21.129, 18.512, 21.556], t: 1.2754128382317362, df: 10.0, p: 0.23099481569803165 },
    PairedCase { x: &[18.29, 21.817, 17.784, 16.236, 15.299, 18.998, 20.126, 23.768, 22.623, 18.396, 22.954, 22.285, 22.446, 17.479, 16.199, 22.26, 21.478, 17.596, 21.011, 16.903, 19.621, 24.389, 20.599, 19.011, 21.657, 23.563, 15.897, 24.595], y: &[19.159, 22.913, 18.59, 16.955, 15.995, 19.681, 21.445, 25.005, 23.244, 19.69, 24.005, 22.978, 23.227, 17.964, 16.994, 23.137, 22.909, 18.47, 22.175, 17.397, 20.811, 25.197, 21.598, 19.41, 21.91, 24.545, 16.526, 25.761], t: -15.560063884881094, df: 27.0, p: 5.281736347782074e-15 },
    PairedCase { x: &[20.895, 22.24, 24.252, 22.6, 18.47, 21.838, 28.127, 21.691, 20.133, 19.197, 16.862, 17.938, 21.64, 20.703, 18.965, 21.479, 21.848, 17.044, 19.464, 19.279, 20.359], y: &[19.876, 19.577, 22.44, 21.15, 16.462, 21.451, 27.243, 20.205, 18.579, 17.73, 14.406, 15.653, 18.669, 18.877, 17.284, 19.879, 20.019, 16.551, 17.343, 17.445, 18.787], t: 11.984628267918382, df: 20.0, p: 1.3906966461264173e-10 },
    PairedCase { x: &[25.852, 18.663, 26.004, 23.22, 22.85, 16.52, 18.214, 20.145, 20.591, 15.359, 18.869, 19.152, 22.54, 24.344, 17.688, 17.679, 17.18, 19.397, 19.796, 16.991, 21.497, 22.211, 14.924, 11.026, 18.588, 20.417, 18.394, 21.624, 16.371], y: &[24.511, 18.709, 27.608, 26.511, 21.518, 20.409, 15.882, 22.982, 21.786, 16.165, 18.343, 16.253, 22.192, 23.893, 18.314, 16.063, 15.989, 15.928, 19.265, 17.453, 21.686, 22.372, 17.766, 12.39, 21.243, 23.264, 16.938, 23.562, 16.32], t: -0.897151429706446, df: 28.0, p: 0.3772875927467515 },
    PairedCase { x: &[20.083, 21.723, 19.562, 19.571, 20.82, 11.979, 14.678, 18.101, 20.562, 17.675, 18.049, 18.662, 14.317, 17.565, 21.918, 19.969, 17.383, 22.412, 19.756], y: &[21.077, 22.94, 20.047, 19.155, 21.66, 13.977, 16.492, 17.993, 21.998, 18.551, 19.613, 17.374, 14.227, 19.094, 23.548, 21.186, 19.33, 22.001, 20.738], t: -4.02464264930972, df: 18.0, p: 0.000794982663865213 },
    PairedCase { x: &[24.933, 20.603, 15.38, 16.554, 21.828, 17.46, 23.055, 21.177, 23.3, 20.43, 20.743, 24.068, 19.753], y: &[24.059, 20.079, 14.087, 16.352, 21.063, 15.925, 22.842, 21.05, 22.117, 19.379, 20.156, 24.557, 19.199], t: 4.2071264478563535, df: 12.0, p: 0.0012163978481322872 },
    PairedCase { x: &[15.482, 21.033, 16.315, 18.531, 18.68, 25.568, 20.83, 20.526, 18.249, 15.353, 19.52, 25.861, 19.103, 18.763, 19.164, 19.715, 22.785, 18.478, 22.061, 17.887, 25.121, 24.68, 18.134, 17.127, 20.66, 23.123], y: &[15.58, 18.106, 14.943, 15.55, 16.745, 25.595, 24.263, 17.344, 15.127, 14.997, 18.418, 24.878, 17.291, 14.809, 17.134, 18.271, 19.726, 16.001, 21.675, 16.062, 25.83, 20.856, 15.624, 18.453, 16.517, 20.278], t: 4.691984862146814, df: 25.0, p: 8.278593807483587e-05 },
    PairedCase { x: &[18.669, 19.35, 28.295, 24.414, 21.377, 20.847, 23.518, 17.917, 23.031, 27.569, 19.058, 20.96, 17.445, 22.398, 18.16, 18.75, 17.497, 21.897, 18.558, 15.863, 14.421, 15.698, 21.116, 20.09, 25.799, 16.353, 20.494, 17.859, 22.202, 17.05], y: &[20.235, 20.674, 29.538, 25.641, 22.211, 22.299, 24.74, 19.415, 24.286, 27.88, 21.103, 22.223, 19.822, 24.369, 19.983, 20.375, 19.77, 22.827, 19.583, 17.189, 16.166, 17.185, 22.816, 21.569, 27.583, 17.76, 22.289, 19.514, 23.953, 18.248], t: -19.106965421726027, df: 29.0, p: 5.640908399131281e-18 },
    PairedCase { x: &[21.274, 22.74, 19.523, 24.798, 17.739, 26.025], y: &[22.268, 23.651, 21.094, 25.096, 17.552, 26.422], t: -2.6233217689407335, df: 5.0, p: 0.046909419019313864 },
    PairedCase { x: &[19.914, 22.879, 22.619, 24.01, 16.029, 19.403, 22.48, 16.141, 17.663, 19.152, 22.482, 19.452, 17.93, 20.247, 14.518, 18.24, 18.267, 20.607, 15.461, 21.552, 17.62, 16.386, 23.946, 22.234, 20.33, 21.573, 25.335, 17.022], y: &[19.265, 21.026, 21.718, 23.11, 15.492, 21.143, 22.408, 15.873, 15.584, 18.946, 21.221, 18.417, 16.65, 20.873, 13.006, 17.086, 17.864, 21.703, 15.109, 21.075, 17.945, 16.655, 24.232, 21.451, 20.256, 21.202, 24.587, 17.618], t: 2.6255283430604854, df: 27.0, p: 0.014073635751491944 },
    PairedCase { x: &[16.572, 19.694, 22.595, 22.102, 17.652, 20.344, 16.837, 22.85, 20.403, 21.654, 21.332, 18.142, 18.861, 21.743, 14.287, 18.896, 17.135], y: &[15.647, 17.466, 21.791, 21.131, 16.597, 19.852, 16.36, 22.37, 18.798, 21.698, 20.998, 17.566, 17.542, 21.736, 13.526, 18.29, 15.556], t: 5.809556744985043, df: 16.0, p: 2.6611500795324687e-05 },
    PairedCase { x: &[21.282, 25.316, 23.995, 19.1, 19.165, 22.941, 22.915, 18.014, 20.656, 23.818, 19.752, 17.131, 21.164], y: &[24.308, 23.537, 24.373, 19.009, 19.139, 22.823, 22.798, 19.289, 19.62, 21.649, 17.653, 16.745, 22.578], t: 0.32416953022681066, df: 12.0, p: 0.751390332974273 },
    PairedCase { x: &[18.552, 19.437, 17.809, 26.589, 20.664, 22.231, 19.374, 20.755, 23.483, 17.796, 21.103, 25.627], y: &[18.655, 19.478, 16.695, 25.789, 19.51, 22.658, 18.285, 19.224, 22.082, 15.068, 17.647, 21.09], t: 3.3617377786006135, df: 11.0, p: 0.006344340074364481 },
    PairedCase { x: &[21.589, 14.598, 22.329, 16.995, 23.663, 20.671, 18.824, 21.384, 17.646, 19.15, 22.763, 19.305, 20.71, 18.269, 19.192, 16.388, 17.389, 21.315, 23.249, 24.239, 18.334, 18.611, 21.172, 19.061], y: &[24.049, 15.465, 24.106, 18.265, 25.561, 22.204, 18.02, 23.545, 17.471, 21.936, 23.042, 24.193, 20.845, 22.984, 19.835, 15.249, 20.556, 20.094, 23.973, 26.57, 18.857, 20.194, 21.908, 18.702], t: -3.8889841081989145, df: 23.0, p: 0.0007408393803022987 },
];

pub const ANOVA: &[AnovaCase] = &[
    AnovaCase { groups: &[&[-0.017, -0.024, 1.196, 0.224, 0.588, 0.854, 0.58, 0.871, 0.211, 0.711, 0.855, 0.65, 0.824], &[1.015, 0.417, 0.693, 0.451, 0.449, 0.612, 0.561, 0.769, 0.636, 0.693, 0.924, 1.203, 1.197, 0.38], &[0.596, 0.706, 0.586, 0.996, 0.511, 0.616, 0.59, 0.686, 0.775, 0.616, 0.873], &[1.355, 1.321, 1.402, 1.201, 1.013, 1.387, 1.06, 1.732, 1.369, 0.997, 1.001, 1.179]], f: 14.967155332938585, df1: 3.0, df2: 46.0, p: 6.200677415279542e-07 },
    AnovaCase { groups: &[&[1.053, 1.453, 1.36, 1.29, 0.913, 0.913, 1.165, 1.293, 1.049, 1.434, 1.13], &[1.201, 1.462, 1.139], &[1.149, 0.217, 0.849, 1.436, 0.4, 1.297, 1.301, 1.129, 1.145, 1.037, 1.263, 1.852, 0.46], &[0.833, 0.601, 0.717, 0.75, 0.817, 0.785, 0.873, 0.717, 0.751, 0.763, 0.911, 0.936, 0.771, 0.684, 0.732], &[0.391, 0.533, 0.464, 0.052, 1.209, 0.271, 1.013, 0.203, 0.497, 0.178], &[0.419, 0.7, 0.723, 0.44, 0.801, 0.635, 0.531, 0.569, 0.433, 0.3, 0.604, 0.608, 0.742, 0.541, 0.695]], f: 12.73949863988901, df1: 5.0, df2: 61.0, p: 1.737335995349359e-08 },
    AnovaCase { groups: &[&[1.348, 1.306, 1.35, 1.227, 1.241, 1.337, 1.262, 1.236, 1.173], &[0.872, 0.761, 0.697, 0.753, 0.724, 0.828], &[1.145, 1.614, 0.914, 0.618, 0.624, 1.34, 0.591, 1.577, 1.048, 0.081, 0.96], &[0.852, 0.65, 0.955, 1.447, 1.429, 1.313, 1.935], &[1.156, 1.51, 1.102, 1.016, 1.507, 0.967, 1.338, 1.225, 1.161, 1.191]], f: 3.6479852760545977, df1: 4.0, df2: 38.0, p: 0.013055878470045607 },
    AnovaCase { groups: &[&[1.06, 1.017, 1.282, 1.5, 0.839], &[1.446, 1.103, 1.174, 1.774, 2.003, 1.533, 1.62, 1.234, 0.922, 1.282], &[1.237, 1.095], &[0.707, 0.719, 0.706, 0.745]], f: 6.242096322890897, df1: 3.0, df2: 17.0, p: 0.004712541379843369 },
    AnovaCase { groups: &[&[0.743, 1.21, 1.126, 1.071, 0.751, 0.69, 1.107, 0.868], &[0.471, 0.796, 0.203, 0.658, 0.441, 0.47], &[0.682, 0.495, 0.441, 0.243, 0.504, 0.594, 0.466, 0.632, 0.632, 0.398, 0.409, 0.244, 0.536, 0.268, 0.583]], f: 20.52308485818746, df1: 2.0, df2: 26.0, p: 4.485304033385922e-06 },
    AnovaCase { groups: &[&[0.641, 0.684, 0.772, 0.674, 1.022, 0.888, 0.913, 0.773, 0.751, 0.613, 0.87, 0.772], &[1.061, 1.391, 1.235, 1.058, 0.975, 0.269, 0.995, 0.686, 0.831, 1.363, 0.439]], f: 2.0190387097967895, df1: 1.0, df2: 21.0, p: 0.17001700191010513 },
    AnovaCase { groups: &[&[1.112, 1.122, 1.107, 1.135, 0.976, 0.964, 1.016, 1.155, 1.341, 1.119, 0.959, 0.92, 0.977, 1.057, 1.035], &[0.589, 0.045, 0.635, 1.217, 0.839, 0.631]], f: 15.193266148073471, df1: 1.0, df2: 19.0, p: 0.0009675403776833449 },
    AnovaCase { groups: &[&[1.534, 0.106], &[0.451, 1.405, 0.451, 0.898, 1.752, 0.316, -0.139, 0.779, 0.813, 0.995, 0.924, 0.682, 0.627, 0.42, 0.709], &[0.698, -0.058, 0.755, 0.416, 0.578, 0.884, 0.5, 0.28, 0.367, 0.488, 0.187, 0.436, 0.449, 0.293], &[1.415, 2.067], &[0.849, 1.335]], f: 5.184778157889889, df1: 4.0, df2: 30.0, p: 0.0026904967516085967 },
    AnovaCase { groups: &[&[0.952, 0.908, 0.93, 1.063, 1.097, 0.959], &[1.318, 1.221, 1.524, 1.542, 1.529, 1.344, 2.025, 1.279, 1.468, 1.81, 1.159, 1.047, 1.379, 2.132], &[1.467, 1.281, 1.294, 0.984, 1.414, 1.887, 1.661, 1.092, 1.3, 1.53, 1.287, 1.457], &[0.373, 0.979, 0.277, 0.568, 0.825, 1.002, 0.797, 0.406, 0.316], &[1.785, 1.145, 1.739, 1.422, 1.007], &[1.394, 1.589]], f: 14.137154332893632, df1: 5.0, df2: 42.0, p: 4.073164506237706e-08 },
    AnovaCase { groups: &[&[1.175, 1.068, 1.268], &[0.568, 1.082, 0.197, 0.704, 0.207, 0.446], &[0.694, 1.008, 0.955, 0.618, 1.271, 0.658, 0.343], &[1.176, 1.052, 0.721, 1.122, 1.608, 1.088, 0.744], &[0.75, 0.399, 0.861, 1.2, 0.756, 0.599, 1.006, 0.716, 0.834, 0.753, 0.5, 0.753, 0.561, 1.324, 0.894], &[0.604, 0.695, 0.849, 0.622, 0.615, 0.784, 0.471, 0.424, 0.515, 0.7, 0.747, 0.732, 0.575, 0.779]], f: 5.579380249023834, df1: 5.0, df2: 46.0, p: 0.00042431732111534336 },
    AnovaCase { groups: &[&[1.092, 1.563, 1.241, 0.887, 1.051, 0.596, 0.584, 1.238, 0.772, 1.243, 1.198, 0.675, 1.3, 0.641], &[0.561, 0.443, 0.377, 0.448, 0.72, 0.541, 0.553, 0.474], &[0.421, -0.048, 0.649, 0.715, 1.012, 1.259, 0.16, 0.448, 0.761, 0.908]], f: 7.924687666992056, df1: 2.0, df2: 29.0, p: 0.0017959870085840703 },
    AnovaCase { groups: &[&[-0.001, 0.85, 0.507, 0.244, 0.953, 0.453, 0.848, 0.094], &[0.007, 0.848, 1.82, 1.48, 1.78, 1.722, 0.588, 0.533, 1.066, 1.297, 0.924, 1.05, 1.034, 0.692, 1.374], &[0.871, 1.589, 0.606, 1.099, 0.089, 0.062, 0.812, 0.097, -0.243, 1.692, 0.501, 1.85, 0.334, 0.59], &[0.778, 0.332], &[0.759, 1.598, 1.134, 0.844, 1.31, 0.706, 0.847, 1.53, 1.362, 0.755, 1.005, 1.2, 0.82, 1.324]], f: 3.1513364107752393, df1: 4.0, df2: 48.0, p: 0.0222373417496164 },
    AnovaCase { groups: &[&[0.607, 0.324, 0.455, 0.605, 0.299, 0.74, 0.645, 0.579, 0.729, 0.45, 0.677, 0.792], &[1.091, 1.036, 1.164, 1.105, 1.04, 1.045, 1.024, 1.029, 1.126, 1.128, 1.194, 1.197, 1.1]], f: 119.10029287596203, df1: 1.0, df2: 23.0, p: 1.4336016313333129e-10 },
    AnovaCase { groups: &[&[0.34, 0.01, 0.02, 0.254, 1.378, 0.393, 0.533, 0.617, 0.379, 0.344, 0.924, -0.259, 0.764, 1.41], &[1.398, 1.751, 1.989, 1.226, 1.212, 0.852, 1.409], &[1.585, 1.444, 1.094, 1.475, 0.728, 1.558, 1.599, 1.057, 1.065, 1.517, 1.27, 1.189, 1.073]], f: 18.1201032746978, df1: 2.0, df2: 31.0, p: 6.135587477427964e-06 },
    AnovaCase { groups: &[&[1.643, 1.288, 1.617, 1.496, 1.632], &[0.548, 0.806, 0.078, 1.423, 0.267, 0.032, 1.021, 0.876, 0.547, 0.776, 0.855, 0.686, 1.258], &[0.736, 0.412, 0.816, 0.603], &[0.341, 0.471, 0.236, -0.145, 0.526, 0.66]], f: 12.376996638209487, df1: 3.0, df2: 24.0, p: 4.313430244004449e-05 },
    AnovaCase { groups: &[&[2.243, 1.997, 1.049, 1.33, 1.696, 1.401, 1.841, 1.374, 1.991, 1.003, 1.764, 1.89, 1.963, 1.468, 1.289], &[0.607, 0.589, 0.445, 0.323, 0.478], &[0.532, 0.53, 0.428, 0.761, 0.627, 0.562, 0.533, 0.631, 0.648, 0.491, 0.512, 0.856, 0.618, 0.812, 0.587], &[0.953, 1.168, 0.959, 1.252, 1.699, 0.976, 1.165, 1.201, 0.823], &[1.02, 1.411, 1.288, 1.748, 1.709, 1.068, 1.36, 1.263, 1.504, 1.018, 1.901, 1.41], &[0.85, 0.883, 0.673, 0.779, 0.733, 0.834, 0.738, 0.785, 0.799, 0.733, 0.9]], f: 37.99377303653818, df1: 5.0, df2: 61.0, p: 1.6531673644670298e-17 },
    AnovaCase { groups: &[&[1.1, 0.443, 1.067, 0.818], &[0.97, 0.837, 0.316, 0.879, 0.031, 0.557, 1.2, 1.145], &[0.45, 0.942, 0.737, 0.738, 0.267]], f: 0.47822360608684006, df1: 2.0, df2: 14.0, p: 0.6296470199763612 },
    AnovaCase { groups: &[&[0.591, 0.402, 0.648, 0.813, 0.561, 0.484, 0.605, 0.524, 0.091, 0.271, 0.365, 0.521], &[1.43, 0.781, 1.202, 0.948, 0.338, 0.279, 1.259, 1.103, 0.327], &[1.167, 0.792, 1.293, 0.703, -0.022, 0.929, -0.222, 1.062], &[0.625, 0.341]], f: 1.6614906432227166, df1: 3.0, df2: 27.0, p: 0.19875702033781922 },
    AnovaCase { groups: &[&[1.34, 1.321, 1.26, 1.078, 1.557, 1.153, 1.722, 1.448, 1.576, 1.357, 1.611], &[0.231, 0.326, 0.392, 1.276, 0.52, 0.727, 0.954, 0.722, 0.555, 0.282, 0.842, 1.185, 1.306, 1.681, 0.708]], f: 19.813901705122447, df1: 1.0, df2: 24.0, p: 0.00016765247778059104 },
    AnovaCase { groups: &[&[1.369, 1.928, 1.456, 1.187, 1.882, 1.17, 1.029, 1.239, 1.445, 1.654, 1.811], &[1.438, 1.766, 1.531, 1.564, 1.55, 1.092, 1.624, 1.33, 1.302, 1.352, 1.618, 1.369, 1.322, 1.196, 1.769], &[-0.365, 0.351, 0.573, 0.367, 0.345, 0.088, 0.694, 0.378, 0.069, 0.945], &[0.602, 0.693, 0.319, 0.812, 0.481, 0.444, 0.621, 0.448], &[0.696, 1.281, 1.136, 0.7, 1.103, 1.138]], f: 40.226755040686605, df1: 4.0, df2: 45.0, p: 2.5632452822837158e-14 },
];

/// (t, df, two-sided p)
pub const T_TAILS: &[(f64, f64, f64)] = &[
    (0.0, 1.0, 1.0),
    (0.5, 1.0, 0.7048327646991336),
    (1.0, 2.0, 0.42264973081037427),
    (2.2, 3.0, 0.1151719519764707),
    (-2.2, 3.0, 0.1151719519764707),
    (1.5, 4.5, 0.20021908565615315),
    (3.0, 7.0, 0.019942126131992522),
    (2.0, 10.0, 0.07338803477074039),
    (4.5, 12.0, 0.0007266529214036917),
    (0.1, 25.0, 0.9211419366152563),
    (2.7, 30.0, 0.011284466510719387),
    (6.0, 40.0, 4.726455132788183e-07),
    (1.96, 100.0, 0.052778901366229654),
    (8.0, 5.0, 0.0004929066605724437),
    (12.0, 200.0, 2.42213600524666e-25),
    (0.75, 0.5, 0.6696651342825101),
];

/// (f, d1, d2, upper tail)
pub const F_TAILS: &[(f64, f64, f64, f64)] = &[
    (0.5, 1.0, 1.0, 0.6081734479693929),
    (1.0, 2.0, 10.0, 0.401877572016461),
    (3.2, 2.0, 27.0, 0.05660222640850086),
    (4.8, 3.0, 12.0, 0.020187581170686152),
    (0.2, 5.0, 40.0, 0.960594783740559),
    (2.5, 4.0, 100.0, 0.04723923891359432),
    (10.0, 1.0, 5.0, 0.02503101581845294),
    (1.7, 8.0, 8.0, 0.23473872749304314),
    (25.0, 2.0, 60.0, 1.2669426511813778e-08),
    (0.9, 12.0, 3.0, 0.6171487641157923),
    (3.0, 5.5, 17.5, 0.03628748171563493),
    (60.0, 3.0, 30.0, 8.77857211420336e-13),
];

pub const SHAPIRO: &[ShapiroCase] = &[
    ShapiroCase { x: &[0.759, -0.646, -2.544], w: 0.9926287307025413, p: 0.8358248148310222 },
    ShapiroCase { x: &[0.199, 0.947, 3.934, 1.453], w: 0.8948770873171872, p: 0.40606091017276175 },
    ShapiroCase { x: &[0.591, 0.895, 0.513, 1.607, 0.908], w: 0.866693348950189, p: 0.25329093037503 },
    ShapiroCase { x: &[0.562, 0.854, -0.586, 1.66, 0.84, 0.171, 0.639], w: 0.9540305134188453, p: 0.7661816406740423 },
    ShapiroCase { x: &[0.965, 1.134, 2.253, -0.807, -0.102, -1.324, -2.016, 2.56, 0.354, -0.884, -0.526], w: 0.9602620534569086, p: 0.7749566119772393 },
    ShapiroCase { x: &[0.001, 0.425, 1.615, 0.248, 1.047, 0.732, 0.706, 0.36, 1.435, 2.118, 3.064, 7.247], w: 0.7164115564936255, p: 0.0012182544321535512 },
    ShapiroCase { x: &[0.567, 1.844, 1.851, 0.586, 0.826, 0.116, 0.097, 2.384, 0.247, 0.603, 1.524, 0.961, 0.982, 1.98, 0.266, 0.039, 1.436, 4.384, 0.99, 0.025], w: 0.8448772282970463, p: 0.0043796175757738875 },
    ShapiroCase { x: &[0.429, 0.631, 0.2, 1.398, 0.536, 0.412, 1.689, 1.156, 0.455, 1.885, 1.37, 0.029, 0.038, 1.069, 0.349, 1.276, 0.24, 3.551, 1.108, 1.959, 1.822, 1.073, 1.194, 0.117, 1.95, 0.83, 0.681, 1.12, 0.685, 0.42, 1.732, 0.984, 0.491, 1.596, 0.34, 0.064, 1.487, 2.594, 0.141, 0.159], w: 0.9133733863480056, p: 0.004795250273068751 },
    ShapiroCase { x: &[2.221, 2.103, 0.066, 0.362, 1.967, 1.699, 1.334, 0.068, 0.046, 0.487, 0.111, 4.068, 1.483, 0.481, 1.439, 1.424, 1.035, 0.065, 0.064, 0.857, 0.626, 1.223, 0.15, 1.431, 0.448, 0.036, 0.379, 0.834, 5.674, 3.16, 1.235, 2.087, 1.015, 1.014, 0.381, 0.031, 0.443, 0.282, 0.649, 1.664, 0.003, 0.125, 0.618, 0.918, 1.205, 1.934, 1.597, 0.87, 0.6, 0.377, 0.01, 1.445, 0.166, 0.038, 0.384, 0.349, 0.95, 0.015, 4.1, 0.26, 1.996, 0.896, 0.429, 0.413, 0.319, 0.138, 2.311, 0.004, 2.724, 2.051, 1.506, 0.727, 1.191, 1.311, 1.099, 0.853, 0.093, 1.548, 0.639, 0.009, 0.866, 0.344, 0.769, 0.723, 1.022, 1.332, 0.27, 0.004, 0.102, 0.285, 1.34, 1.498, 0.964, 0.718, 0.033, 0.219, 0.528, 4.339, 0.297, 0.007], w: 0.7999959943996102, p: 2.4752831639200607e-10 },
];
