#pragma once

// Generated by tools/generate_profile.py; do not edit.

namespace dolphin {

inline constexpr int kReferenceProfileSamples = 201;

inline constexpr char kReferenceProfileCsv[] = R"csv(x_m,y_upper_m,y_lower_m
0.000000,0.000000000,0.000000000
0.005000,0.022577939,-0.022203602
0.010000,0.031606288,-0.030862984
0.015000,0.038387378,-0.037280565
0.020000,0.043994969,-0.042530192
0.025000,0.048845087,-0.047027975
0.030000,0.053151186,-0.050987447
0.035000,0.057040142,-0.054535566
0.040000,0.060594688,-0.057755138
0.045000,0.063872345,-0.060703758
0.050000,0.066915046,-0.063423429
0.055000,0.069754491,-0.065945917
0.060000,0.072415348,-0.068295957
0.065000,0.074917272,-0.070493265
0.070000,0.077276236,-0.072553871
0.075000,0.079505434,-0.074491027
0.080000,0.081615921,-0.076315843
0.085000,0.083617081,-0.078037749
0.090000,0.085516958,-0.079664840
0.095000,0.087322518,-0.081204127
0.100000,0.089039846,-0.082661736
0.105000,0.090674298,-0.084043060
0.110000,0.092230617,-0.085352883
0.115000,0.093713037,-0.086595467
0.120000,0.095125352,-0.087774641
0.125000,0.096470985,-0.088893853
0.130000,0.097753038,-0.089956231
0.135000,0.098974333,-0.090964618
0.140000,0.100137451,-0.091921614
0.145000,0.101244758,-0.092829601
0.150000,0.102298434,-0.093690774
0.155000,0.103300494,-0.094507157
0.160000,0.104252805,-0.095280625
0.165000,0.105157104,-0.096012919
0.170000,0.106015009,-0.096705659
0.175000,0.106828033,-0.097360359
0.180000,0.107597595,-0.097978433
0.185000,0.108325028,-0.098561206
0.190000,0.109011587,-0.099109926
0.195000,0.109658455,-0.099625763
0.200000,0.110266753,-0.100109824
0.205000,0.110837541,-0.100563150
0.210000,0.111371827,-0.100986730
0.215000,0.111870567,-0.101381497
0.220000,0.112334675,-0.101748338
0.225000,0.112765021,-0.102088095
0.230000,0.113162434,-0.102401568
0.235000,0.113527713,-0.102689519
0.240000,0.113861618,-0.102952675
0.245000,0.114164882,-0.103191729
0.250000,0.114438206,-0.103407341
0.255000,0.114682269,-0.103600144
0.260000,0.114897720,-0.103770743
0.265000,0.115085187,-0.103919716
0.270000,0.115245278,-0.104047620
0.275000,0.115378577,-0.104154985
0.280000,0.115485650,-0.104242321
0.285000,0.115567047,-0.104310119
0.290000,0.115623299,-0.104358849
0.295000,0.115654921,-0.104388964
0.300000,0.115662413,-0.104400897
0.305000,0.115646262,-0.104395067
0.310000,0.115606940,-0.104371877
0.315000,0.115544906,-0.104331715
0.320000,0.115460609,-0.104274952
0.325000,0.115354483,-0.104201950
0.330000,0.115226955,-0.104113054
0.335000,0.115078439,-0.104008599
0.340000,0.114909339,-0.103888906
0.345000,0.114720051,-0.103754287
0.350000,0.114510961,-0.103605041
0.355000,0.114282445,-0.103441456
0.360000,0.114034874,-0.103263813
0.365000,0.113768609,-0.103072380
0.370000,0.113484002,-0.102867417
0.375000,0.113181401,-0.102649174
0.380000,0.112861144,-0.102417894
0.385000,0.112523564,-0.102173811
0.390000,0.112168986,-0.101917149
0.395000,0.111797731,-0.101648127
0.400000,0.111410111,-0.101366954
0.405000,0.111006434,-0.101073833
0.410000,0.110587002,-0.100768959
0.415000,0.110152111,-0.100452522
0.420000,0.109702053,-0.100124703
0.425000,0.111139177,-0.099785678
0.430000,0.114387913,-0.099435615
0.435000,0.118689593,-0.099074679
0.440000,0.123624280,-0.098703026
0.445000,0.128865201,-0.098320807
0.450000,0.134138992,-0.097928169
0.455000,0.139213437,-0.097525253
0.460000,0.143892894,-0.097112193
0.465000,0.148016296,-0.096689119
0.470000,0.151455942,-0.096256156
0.475000,0.154116402,-0.095813425
0.480000,0.155933212,-0.095361042
0.485000,0.156871264,-0.094899116
0.490000,0.156922844,-0.094427755
0.495000,0.156105354,-0.093947060
0.500000,0.154458745,-0.093457129
0.505000,0.152042715,-0.092958055
0.510000,0.148933745,-0.092449929
0.515000,0.145222026,-0.091932835
0.520000,0.141008342,-0.091406856
0.525000,0.136400974,-0.090872068
0.530000,0.131512671,-0.090328547
0.535000,0.126457753,-0.089776363
0.540000,0.121349384,-0.089215583
0.545000,0.116297049,-0.088646271
0.550000,0.111404287,-0.088068488
0.555000,0.106766681,-0.087482289
0.560000,0.102470154,-0.086887730
0.565000,0.098589552,-0.086284860
0.570000,0.095187551,-0.085673728
0.575000,0.092313872,-0.085054379
0.580000,0.090004798,-0.084426854
0.585000,0.088282996,-0.083791193
0.590000,0.087157617,-0.083147431
0.595000,0.086326421,-0.082495602
0.600000,0.085487795,-0.081835738
0.605000,0.084641891,-0.081167866
0.610000,0.083788858,-0.080492012
0.615000,0.082928841,-0.079808199
0.620000,0.082061981,-0.079116449
0.625000,0.081188419,-0.078416781
0.630000,0.080308290,-0.077709209
0.635000,0.079421727,-0.076993749
0.640000,0.078528860,-0.076270411
0.645000,0.077629815,-0.075539207
0.650000,0.076724716,-0.074800142
0.655000,0.075813685,-0.074053223
0.660000,0.074896837,-0.073298454
0.665000,0.073974289,-0.072535835
0.670000,0.073046151,-0.071765367
0.675000,0.072112531,-0.070987046
0.680000,0.071173535,-0.070200869
0.685000,0.070229265,-0.069406831
0.690000,0.069279821,-0.068604923
0.695000,0.068325297,-0.067795136
0.700000,0.067365787,-0.066977459
0.705000,0.066401381,-0.066151880
0.710000,0.065432166,-0.065318383
0.715000,0.064458225,-0.064476955
0.720000,0.063479638,-0.063627576
0.725000,0.062496483,-0.062770230
0.730000,0.061508835,-0.061904894
0.735000,0.060516765,-0.061031548
0.740000,0.059520340,-0.060150169
0.745000,0.058519626,-0.059260732
0.750000,0.057514683,-0.058363212
0.755000,0.056505572,-0.057457581
0.760000,0.055492348,-0.056543812
0.765000,0.054475062,-0.055621876
0.770000,0.053453765,-0.054691741
0.775000,0.052428501,-0.053753375
0.780000,0.051399315,-0.052806747
0.785000,0.050366245,-0.051851822
0.790000,0.049329329,-0.050888564
0.795000,0.048288599,-0.049916938
0.800000,0.047244086,-0.048936907
0.805000,0.046195816,-0.047948432
0.810000,0.045143814,-0.046951474
0.815000,0.044088100,-0.045945993
0.820000,0.043028691,-0.044931948
0.825000,0.041965602,-0.043909296
0.830000,0.040898843,-0.042877996
0.835000,0.039828422,-0.041838003
0.840000,0.038754344,-0.040789272
0.845000,0.037676610,-0.039731758
0.850000,0.036595218,-0.038665414
0.855000,0.035510162,-0.037590194
0.860000,0.034421435,-0.036506050
0.865000,0.033329024,-0.035412932
0.870000,0.032232915,-0.034310792
0.875000,0.031133089,-0.033199580
0.880000,0.030029525,-0.032079243
0.885000,0.028922199,-0.030949731
0.890000,0.027811083,-0.029810991
0.895000,0.026696145,-0.028662971
0.900000,0.025577350,-0.027505616
0.905000,0.024454662,-0.026338873
0.910000,0.023328040,-0.025162685
0.915000,0.022197439,-0.023976999
0.920000,0.021062811,-0.022781756
0.925000,0.019924107,-0.021576901
0.930000,0.018781273,-0.020362375
0.935000,0.017634250,-0.019138121
0.940000,0.016482980,-0.017904080
0.945000,0.015327398,-0.016660192
0.950000,0.014167437,-0.015406398
0.955000,0.013003028,-0.014142637
0.960000,0.011834096,-0.012868847
0.965000,0.010660567,-0.011584968
0.970000,0.009482359,-0.010290937
0.975000,0.008299390,-0.008986691
0.980000,0.007111573,-0.007672167
0.985000,0.005918820,-0.006347301
0.990000,0.004721038,-0.005012027
0.995000,0.003518131,-0.003666282
1.000000,0.002310000,-0.002310000
)csv";

} // namespace dolphin
