"""Closed forms for the L-shape biharmonic benchmark.

Generated by tools/gen_example1.py; do not edit by hand.  All functions take
polar coordinates ``r > 0`` and ``t`` in [0, 3*pi/2].
"""

from numpy import cos, pi, sin

# root of sin(a*OMEGA) = a, i.e. 0.5444837 to the quoted digits; the full
# double keeps the normal derivative zero on the edges at the corner
SING = 0.5444837367824639
OMEGA = 1.5 * pi



def u(r, t):
    x0 = SING + 1
    x1 = r**2
    x2 = SING - 1
    x3 = t*x2
    x4 = t*x0
    x5 = 1/x0
    x6 = OMEGA*x0
    x7 = 1/x2
    x8 = OMEGA*x2
    return -r**x0*(x1*sin(t)**2 - 1)**2*(x1*cos(t)**2 - 1)**2*(-(x5*sin(x4) - x7*sin(x3))*(-cos(x6) + cos(x8)) + (x5*sin(x6) - x7*sin(x8))*(cos(x3) - cos(x4)))


def ux(r, t):
    x0 = SING + 1
    x1 = cos(t)
    x2 = x1**2
    x3 = r**2
    x4 = sin(t)
    x5 = x4**2
    x6 = x3*x5 - 1
    x7 = 4*r
    x8 = x2*x3 - 1
    x9 = 1/r
    x10 = x6*x8
    x11 = SING - 1
    x12 = t*x11
    x13 = t*x0
    x14 = cos(x12) - cos(x13)
    x15 = 1/x0
    x16 = OMEGA*x0
    x17 = 1/x11
    x18 = OMEGA*x11
    x19 = x15*sin(x16) - x17*sin(x18)
    x20 = -cos(x16) + cos(x18)
    x21 = sin(x13)
    x22 = sin(x12)
    x23 = x1*(x14*x19 - x20*(x15*x21 - x17*x22))
    x24 = 4*x23*x3*x4
    return -r**x0*x10*(x23*(x0*x10*x9 + x2*x6*x7 + x5*x7*x8) + x4*x9*(x10*(-x14*x20 + x19*(-x0*x21 + x11*x22)) + x24*x6 - x24*x8))


def uy(r, t):
    x0 = SING + 1
    x1 = cos(t)
    x2 = x1**2
    x3 = r**2
    x4 = sin(t)
    x5 = x4**2
    x6 = x3*x5 - 1
    x7 = 4*r
    x8 = x2*x3 - 1
    x9 = 1/r
    x10 = x6*x8
    x11 = SING - 1
    x12 = t*x11
    x13 = t*x0
    x14 = cos(x12) - cos(x13)
    x15 = 1/x0
    x16 = OMEGA*x0
    x17 = 1/x11
    x18 = OMEGA*x11
    x19 = x15*sin(x16) - x17*sin(x18)
    x20 = -cos(x16) + cos(x18)
    x21 = sin(x13)
    x22 = sin(x12)
    x23 = x4*(x14*x19 - x20*(x15*x21 - x17*x22))
    x24 = 4*x1*x23*x3
    return r**x0*x10*(x1*x9*(x10*(-x14*x20 + x19*(-x0*x21 + x11*x22)) + x24*x6 - x24*x8) - x23*(x0*x10*x9 + x2*x6*x7 + x5*x7*x8))


def uxx(r, t):
    x0 = SING + 1
    x1 = cos(t)
    x2 = r**2
    x3 = 1/x2
    x4 = SING - 1
    x5 = OMEGA*x4
    x6 = OMEGA*x0
    x7 = cos(x5) - cos(x6)
    x8 = t*x4
    x9 = cos(x8)
    x10 = t*x0
    x11 = cos(x10)
    x12 = -x11 + x9
    x13 = sin(x8)
    x14 = sin(x10)
    x15 = -x0*x14 + x13*x4
    x16 = 1/x0
    x17 = 1/x4
    x18 = x16*sin(x6) - x17*sin(x5)
    x19 = -x12*x7 + x15*x18
    x20 = x1**2
    x21 = x2*x20
    x22 = x21 - 1
    x23 = sin(t)
    x24 = x23**2
    x25 = x2*x24
    x26 = x25 - 1
    x27 = x22*x26
    x28 = x19*x27
    x29 = 4*x26
    x30 = x12*x18 - x7*(-x13*x17 + x14*x16)
    x31 = x1*x30
    x32 = x2*x23
    x33 = x31*x32
    x34 = 4*x22
    x35 = x23*x27
    x36 = x26**2
    x37 = 8*x2
    x38 = x36*x37
    x39 = x22**2
    x40 = x37*x39
    x41 = x24*x39
    x42 = x29*x41
    x43 = x20*x36
    x44 = x34*x43
    x45 = 8*x0
    x46 = x0**2
    x47 = x36*x39
    x48 = 32*x24*x27
    x49 = x31*x39
    x50 = x23**3
    x51 = r**3
    x52 = 8*x51
    x53 = x50*x52
    x54 = x1**3
    x55 = x30*x54
    x56 = x23*x36
    x57 = x52*x56
    x58 = 16*x51
    x59 = 8*r
    x60 = x23*x26
    x61 = x59*x60
    x62 = x22*x56
    x63 = x50*x58
    x64 = r*x29
    x65 = x0*x23*x64
    x66 = r*x34
    x67 = x0*x56*x66
    x68 = 1/r
    x69 = x0*x68
    x70 = r*x19
    x71 = x19*x47*x69 + x42*x70 + x44*x70
    x72 = x23*x68
    x73 = -x30
    x74 = x35*x73
    x75 = x1*x32
    x76 = x34*x73
    x77 = x1*x27
    x78 = r**4
    x79 = 8*x73
    x80 = x78*x79
    x81 = x1*x19
    x82 = x39*x73
    x83 = x29*x82
    x84 = x36*x76
    x85 = x1*x82
    return r**x0*(x1*(x3*x35*(x28 + x29*x33 - x33*x34) + x31*(x0*x3*x36*x39 - x1**4*x38 - x21*x48 - x22*x43*x45 - x23**4*x40 - x26*x41*x45 - x3*x46*x47 - x42 - x44) - x72*(x27*x31*x63 + x31*x59*x62 + x31*x67 - x35*x55*x58 - x49*x53 - x49*x61 - x49*x65 + x55*x57 + x71)) + x72*(-x1*(-r*x1*x62*x79 - x1*x67*x73 + x53*x85 - x54*x57*x73 + x54*x58*x74 + x61*x85 - x63*x73*x77 + x65*x85 + x71) + x68*x77*(x28 - x29*x73*x75 + x75*x76) + x72*(x20*x41*x80 - x20*x48*x73*x78 + x21*x83 - x21*x84 - x22*x23*x38*x81 + x24*x43*x80 - x25*x83 + x25*x84 + x40*x60*x81 - x47*(-x15*x7 + x18*(x11*x46 - x4**2*x9))) + x74*(x20*x64 + x24*x66 + x27*x69)))


def uxy(r, t):
    x0 = SING + 1
    x1 = sin(t)
    x2 = r**2
    x3 = 1/x2
    x4 = SING - 1
    x5 = OMEGA*x4
    x6 = OMEGA*x0
    x7 = cos(x5) - cos(x6)
    x8 = t*x4
    x9 = cos(x8)
    x10 = t*x0
    x11 = cos(x10)
    x12 = -x11 + x9
    x13 = sin(x8)
    x14 = sin(x10)
    x15 = -x0*x14 + x13*x4
    x16 = 1/x0
    x17 = 1/x4
    x18 = x16*sin(x6) - x17*sin(x5)
    x19 = -x12*x7 + x15*x18
    x20 = cos(t)
    x21 = x20**2
    x22 = x2*x21
    x23 = x22 - 1
    x24 = x1**2
    x25 = x2*x24
    x26 = x25 - 1
    x27 = x23*x26
    x28 = x19*x27
    x29 = 4*x26
    x30 = x12*x18 - x7*(-x13*x17 + x14*x16)
    x31 = x20*x30
    x32 = x1*x2
    x33 = x31*x32
    x34 = 4*x23
    x35 = x1*x27
    x36 = x26**2
    x37 = 8*x2
    x38 = x36*x37
    x39 = x23**2
    x40 = x37*x39
    x41 = x24*x39
    x42 = x29*x41
    x43 = x21*x36
    x44 = x34*x43
    x45 = 8*x0
    x46 = x0**2
    x47 = x36*x39
    x48 = 32*x24*x27
    x49 = x31*x39
    x50 = x1**3
    x51 = r**3
    x52 = 8*x51
    x53 = x50*x52
    x54 = x20**3
    x55 = x30*x54
    x56 = x1*x36
    x57 = x52*x56
    x58 = 16*x51
    x59 = 8*r
    x60 = x1*x26
    x61 = x59*x60
    x62 = x23*x56
    x63 = x27*x50*x58
    x64 = r*x29
    x65 = x0*x1*x64
    x66 = r*x34
    x67 = x0*x56*x66
    x68 = 1/r
    x69 = x0*x68
    x70 = r*x19
    x71 = x19*x47*x69 + x42*x70 + x44*x70
    x72 = x1*x68
    x73 = -x30
    x74 = x35*x73
    x75 = x20*x32
    x76 = x34*x73
    x77 = x20*x68
    x78 = r**4
    x79 = 8*x73
    x80 = x78*x79
    x81 = x19*x20
    x82 = x39*x73
    x83 = x29*x82
    x84 = x36*x76
    x85 = x20*x82
    x86 = x20*x73
    return r**x0*(x1*(x3*x35*(x28 + x29*x33 - x33*x34) + x31*(x0*x3*x36*x39 - x1**4*x40 - x20**4*x38 - x22*x48 - x23*x43*x45 - x26*x41*x45 - x3*x46*x47 - x42 - x44) - x72*(x31*x59*x62 + x31*x63 + x31*x67 - x35*x55*x58 - x49*x53 - x49*x61 - x49*x65 + x55*x57 + x71)) - x77*(-x20*(-r*x20*x62*x79 + x53*x85 - x54*x57*x73 + x54*x58*x74 + x61*x85 - x63*x86 + x65*x85 - x67*x86 + x71) + x27*x77*(x28 - x29*x73*x75 + x75*x76) + x72*(-x1*x23*x38*x81 + x21*x41*x80 - x21*x48*x73*x78 + x22*x83 - x22*x84 + x24*x43*x80 - x25*x83 + x25*x84 + x40*x60*x81 - x47*(-x15*x7 + x18*(x11*x46 - x4**2*x9))) + x74*(x21*x64 + x24*x66 + x27*x69)))


def uyy(r, t):
    x0 = SING + 1
    x1 = sin(t)
    x2 = cos(t)
    x3 = r**2
    x4 = 1/x3
    x5 = SING - 1
    x6 = OMEGA*x5
    x7 = OMEGA*x0
    x8 = cos(x6) - cos(x7)
    x9 = t*x5
    x10 = cos(x9)
    x11 = t*x0
    x12 = cos(x11)
    x13 = x10 - x12
    x14 = sin(x9)
    x15 = sin(x11)
    x16 = -x0*x15 + x14*x5
    x17 = 1/x0
    x18 = 1/x5
    x19 = x17*sin(x7) - x18*sin(x6)
    x20 = -x13*x8 + x16*x19
    x21 = x2**2
    x22 = x21*x3
    x23 = x22 - 1
    x24 = x1**2
    x25 = x24*x3
    x26 = x25 - 1
    x27 = x23*x26
    x28 = 4*x26
    x29 = x13*x19 - x8*(-x14*x18 + x15*x17)
    x30 = x1*x29
    x31 = x2*x30
    x32 = x3*x31
    x33 = 4*x23
    x34 = x27*(x20*x27 + x28*x32 - x32*x33)
    x35 = x26**2
    x36 = 8*x3
    x37 = x35*x36
    x38 = x23**2
    x39 = x24*x38
    x40 = x28*x39
    x41 = x21*x35
    x42 = x33*x41
    x43 = 8*x0
    x44 = x0**2
    x45 = x35*x38
    x46 = r**3
    x47 = 8*x46
    x48 = x2**3*x30
    x49 = x1**3
    x50 = x2*x29
    x51 = r*x20
    x52 = 1/r
    x53 = x0*x52
    x54 = x31*x38
    x55 = 8*r
    x56 = x31*x35
    x57 = 16*x46
    x58 = x27*x50
    x59 = r*x28
    x60 = r*x33
    x61 = -x0*x54*x59 + x0*x56*x60 + x20*x45*x53 + x23*x55*x56 - x26*x54*x55 - x27*x48*x57 + x35*x47*x48 - x38*x47*x49*x50 + x40*x51 + x42*x51 + x49*x57*x58
    x62 = x2*x52
    x63 = r**4
    x64 = 8*x29*x63
    return r**x0*(x1*(-x2*x34*x4 + x30*(x0*x35*x38*x4 - x1**4*x36*x38 - x2**4*x37 - 32*x22*x24*x27 - x23*x41*x43 - x26*x39*x43 - x4*x44*x45 - x40 - x42) + x61*x62) + x62*(-x1*x34*x52 + x1*x61 + x2*x52*(-x1*x2*x20*x23*x37 + 8*x1*x2*x20*x26*x3*x38 + 32*x21*x23*x24*x26*x29*x63 + 4*x21*x23*x29*x3*x35 - x21*x39*x64 - x22*x28*x29*x38 + 4*x24*x26*x29*x3*x38 - x24*x41*x64 - x25*x29*x33*x35 + x35*x38*(x16*x8 + x19*(x10*x5**2 - x12*x44))) - x58*(x21*x59 + x24*x60 + x27*x53)))


def bilap(r, t):
    x0 = SING + 1
    x1 = r**3
    x2 = 1/x1
    x3 = SING - 1
    x4 = t*x3
    x5 = cos(x4)
    x6 = t*x0
    x7 = cos(x6)
    x8 = x5 - x7
    x9 = 1/x0
    x10 = OMEGA*x0
    x11 = 1/x3
    x12 = OMEGA*x3
    x13 = -x11*sin(x12) + x9*sin(x10)
    x14 = -cos(x10) + cos(x12)
    x15 = sin(x6)
    x16 = sin(x4)
    x17 = -x11*x16 + x15*x9
    x18 = x13*x8 - x14*x17
    x19 = 2*x18
    x20 = cos(t)
    x21 = x20**2
    x22 = r**2
    x23 = sin(t)
    x24 = x23**2
    x25 = x22*x24
    x26 = x25 - 1
    x27 = x21*x26
    x28 = 4*r
    x29 = x21*x22
    x30 = x29 - 1
    x31 = x24*x30
    x32 = 1/r
    x33 = x0*x26
    x34 = x30*x33
    x35 = x26*x30
    x36 = x35*(x27*x28 + x28*x31 + x32*x34)
    x37 = x30**2
    x38 = 3*x25
    x39 = x38 - 1
    x40 = x37*x39
    x41 = x26**2
    x42 = 3*x29
    x43 = x42 - 1
    x44 = x41*x43
    x45 = 1/x22
    x46 = x37*x41
    x47 = x45*x46
    x48 = x0*x47
    x49 = x24*x26
    x50 = x37*x49
    x51 = 8*x0
    x52 = x21*x30
    x53 = x41*x52
    x54 = x29*x30
    x55 = x49*x54
    x56 = 32*x55
    x57 = x50*x51 + x51*x53 + x56
    x58 = SING*x48 + 4*x21*x44 + 4*x24*x40 + x57
    x59 = x0*x58
    x60 = x18*x45
    x61 = x0**2
    x62 = 4*x50
    x63 = 4*x53
    x64 = x23**4
    x65 = x37*x64
    x66 = 8*x22
    x67 = x20**4
    x68 = x41*x67
    x69 = x47*x61 - x48 + x57 + x62 + x63 + x65*x66 + x66*x68
    x70 = 24*r
    x71 = x68*x70
    x72 = x65*x70
    x73 = x49*x67
    x74 = 96*x1
    x75 = x52*x64
    x76 = x27*x31
    x77 = r*x76
    x78 = x2*x46
    x79 = x0**3
    x80 = 96*x0
    x81 = 12*x32*x61
    x82 = x18*x32
    x83 = 12*x68
    x84 = 12*x65
    x85 = x51*x68
    x86 = x51*x65
    x87 = 32*x1
    x88 = 32*x76
    x89 = r*x88
    x90 = x24*x27
    x91 = 8*x43*x90
    x92 = x21*x31
    x93 = 8*x39*x92
    x94 = SING*x0
    x95 = 2*x49
    x96 = x32*x94
    x97 = 2*x52
    x98 = r*x83 + r*x84 + r*x85 + r*x86 + r*x91 + r*x93 + x0*x89 + x37*x95*x96 + x41*x96*x97 + x73*x87 + x75*x87 - x78*x94 + x89
    x99 = 4*x32
    x100 = x0*x18
    x101 = x64*x67
    x102 = r**4
    x103 = 128*x102
    x104 = 4*x0
    x105 = SING*x104
    x106 = x25*x26
    x107 = x54*x64
    x108 = x25*x39
    x109 = x29*x43
    x110 = 1/x102
    x111 = x50*x94
    x112 = 6*x45
    x113 = x53*x94
    x114 = -x0*x15 + x16*x3
    x115 = x114*x13 - x14*x8
    x116 = x115*x23
    x117 = x116*x20
    x118 = x117*x37
    x119 = x118*x26
    x120 = x30*x41
    x121 = x117*x120
    x122 = x3**2*x5 - x61*x7
    x123 = x114*x14 + x122*x13
    x124 = x123*x46
    x125 = x102*x18
    x126 = x24*x29
    x127 = 2*x126
    x128 = x127 + x31 - x52
    x129 = x128*x41
    x130 = 4*x18
    x131 = x130*x22
    x132 = x127 + x27 - x49
    x133 = x132*x37
    x134 = x119*x66 - x121*x66 + x124 + x125*x88 - x129*x131 - x131*x133
    x135 = x110*x134
    x136 = 4*x22
    x137 = x20**3
    x138 = x116*x137
    x139 = x138*x41
    x140 = x136*x139
    x141 = x132*x54
    x142 = x130*x141
    x143 = x106*x128
    x144 = x130*x143
    x145 = -x21 + 3*x24
    x146 = x29*x41
    x147 = x145*x146
    x148 = x147*x19
    x149 = -3*x21 + x24
    x150 = x25*x37
    x151 = x150*x19
    x152 = x23**3
    x153 = x115*x152
    x154 = x20*x37
    x155 = x153*x154
    x156 = 16*x102
    x157 = x156*x18
    x158 = x153*x20
    x159 = x35*x66
    x160 = x158*x159
    x161 = x133*x19
    x162 = x129*x19
    x163 = x123*x50
    x164 = x123*x53
    x165 = 4*x121
    x166 = 4*x26
    x167 = x118*x166 - x161 - x162 + x163 + x164 - x165
    x168 = x45*(x136*x155 + x138*x159 - x140 - x142 - x144 - x148 + x149*x151 + x157*x73 + x157*x75 - x160 + x167 + x18*x56)
    x169 = 8*x18
    x170 = x102*x169
    x171 = 2*x123*x22
    x172 = r**6
    x173 = 64*x101*x172
    x174 = x137*x153
    x175 = 32*x102
    x176 = x174*x175
    x177 = 20*x22
    x178 = 20*x18
    x179 = 10*x18
    x180 = 144*x125
    x181 = x158*x35
    x182 = 40*x22
    x183 = x156*x90
    x184 = 8*x55
    x185 = x156*x92
    x186 = x138*x35
    x187 = 96*x55
    x188 = -x13*x8 + x14*x17
    x189 = x134*x2
    x190 = 2*x44
    x191 = 2*x40
    x192 = x33*x37
    x193 = 16*x35
    x194 = 8*x34
    x195 = 8*x117
    x196 = 6*x22
    x197 = 80*x102
    x198 = x27*x64
    x199 = x31*x67
    x200 = x104*x22
    x201 = x39*x64
    x202 = 8*x102
    x203 = x43*x67
    x204 = 30*x126
    x205 = x0*x175
    x206 = x0*x156
    x207 = 20*x0*x126
    x208 = x193*x22
    x209 = x127*x94
    x210 = x27*x37
    x211 = x31*x41
    x212 = x34*x66
    x213 = x1*x169
    x214 = r**5
    x215 = 64*x18*x214
    x216 = r*x169
    x217 = r*x0*x130
    x218 = 48*x102
    x219 = 320*x172
    x220 = x174*x219
    x221 = x18*x219
    x222 = 32*x22
    x223 = 320*x102
    x224 = 64*x125
    x225 = x224*x35
    x226 = x21*x24
    x227 = 40*x102*x226
    x228 = x123*x37
    x229 = -x15*x79 + x16*x3**3
    x230 = 20*x26
    x231 = 20*x120*x123
    x232 = 5*x21*x22 - x38 - 2
    x233 = 16*x22
    x234 = 5*x22*x24 - x42 - 2
    x235 = x154*x26
    x236 = x122*x14 - x13*x229
    x237 = x23*x66
    x238 = -x236*x237
    x239 = x236*x237
    x240 = x120*x20
    x241 = 32*x132
    x242 = x172*x18*x226
    x243 = 32*x128
    x244 = x102*x117
    x245 = x128*x157
    x246 = x132*x157
    x247 = x123*x136
    x248 = 3*x22
    x249 = -22*x126 + x248*x64 + x248*x67
    x250 = x18*x66
    return -r**x0*(5*x0*x135 + x100*x98*x99 - x135*x61 - 6*x135 - x168*x51 + 16*x168 + x19*x2*x36 - x19*x45*x69 + x19*(x0*x88 + x101*x103 + x105*x65 + x105*x68 + 256*x106*x67 + x107*x80 + 256*x107 + 16*x108*x67 + 16*x109*x64 + 3*x110*x46*x94 - x111*x112 - x112*x113 + 96*x25*x33*x67 + 16*x76*x94 + x83 + x84 + x85 + x86 + x88 + x91 + x93) + x32*(-x0*x189 - x188*x32*x69 + x188*x36*x45 + 2*x189 + x19*x98 + x59*x82 - x99*(16*x102*x18*x21*x30*x64 + 16*x102*x18*x24*x26*x67 + 8*x115*x137*x22*x23*x26*x30 + 4*x115*x152*x20*x22*x37 + 4*x115*x20*x23*x26*x37 + x123*x21*x30*x41 + x123*x24*x26*x37 - x140 - x142 - x144 - x148 + x149*x151 - x160 - x161 - x162 - x165 + 32*x18*x21*x22*x24*x26*x30)) + x45*(-x123*x58 + x130*(-80*x0*x55 - x0*x62 - x0*x63 - x103*x73 - x103*x75 + x104*x210 + x104*x211 - 20*x109*x49 - x111 - x113 + x136*x201*x30 + x136*x203*x26 - x173 - x184*x94 - x187 - x190*x21 + x190*x24 + x191*x21 - x191*x24 - x196*x65 - x196*x68 + x197*x198 + x197*x199 + x198*x206 + x199*x206 - x200*x65 - x200*x68 + x201*x202*x21 + x202*x203*x24 + x204*x37 + x204*x41 - x205*x73 - x205*x75 + x207*x37 + x207*x41 + x208*x64 + x208*x67 + x209*x37 + x209*x41 + x210*x94 + x211*x94 + x212*x64 + x212*x67 - 20*x29*x31*x39) + x195*(-SING*x192 + x104*x120 + x104*x146 - x104*x150 + 4*x108*x30 - x109*x166 + x120*x94 + 6*x146 - 6*x150 + x183 - x185 + x190 - x191 - 4*x192 + x193*x25 - x193*x29 + x194*x25 - x194*x29) + x32*(8*r*x0*x115*x20*x23*x30*x41 + 4*r*x0*x18*x21*x26*x37 + 4*r*x0*x18*x24*x30*x41 + 16*r*x115*x20*x23*x30*x41 - 16*r*x119 + 8*r*x18*x21*x26*x37 + 8*r*x18*x24*x30*x41 - r*x192*x195 + 8*x0*x1*x18*x21*x24*x37 + 8*x0*x1*x18*x21*x24*x41 - x0*x124*x32 + 16*x1*x115*x137*x23*x41 + 32*x1*x115*x152*x20*x26*x30 - 16*x1*x155 + 40*x1*x18*x21*x24*x37 + 40*x1*x18*x21*x24*x41 + 16*x1*x18*x26*x30*x64 + 16*x1*x18*x26*x30*x67 - 160*x1*x18*x76 - x100*x76*x87 - x138*x35*x87 - x163*x28 - x164*x28 + 32*x18*x21*x214*x26*x64 + 32*x18*x214*x24*x30*x67 - x213*x65 - x213*x68 - x215*x73 - x215*x75 - x216*x50 - x216*x53 - x217*x50 - x217*x53) + x45*(256*r**8*x101*x18 + 192*x102*x123*x76 - x117*x232*x233*x41 + x118*x233*x234 + x119*x222 - x121*x222 + x123*x150*x230 - x123*x227*x41 + 384*x125*x76 - x129*x247 - x133*x247 - x138*x218*x37 - x139*x218 + x155*x218 + x158*x218*x41 - x181*x223 + x186*x223 - x198*x221 - x199*x221 - x220*x26 + x220*x30 + x221*x73 + x221*x75 + x224*x232*x90 + x224*x234*x92 - x225*x64 - x225*x67 - x227*x228 - x228*x230*x29 - x231*x25 + x231*x29 + x235*x238 - x235*x239 - x238*x240 + x239*x240 + x241*x242 + x241*x244*x30 + x242*x243 - x243*x244*x26 + x245*x27 - x245*x49 + x246*x31 - x246*x52 + x250*x37*(x249 - 2*x27 + x95) + x250*x41*(x249 - 2*x31 + x97) + x46*(x13*(-x0**4*x7 + x3**4*x5) + x14*x229))) - 4*x45*(-x115*x156*x20*x23**5*x30 + x116*x156*x20**5*x26 + x123*x184 - x128*x170*x64 - x132*x170*x67 - x139*x177 - x141*x178 - x143*x178 - x145*x18*x183 - x147*x179 + x149*x150*x179 + x149*x18*x185 + x155*x177 + x167 + x171*x65 + x171*x68 + x173*x18 - x176*x26 + x176*x30 + x18*x187 + x180*x73 + x180*x75 - x181*x182 + x182*x186) + x58*x60*x61 - x59*x60 + x82*(x0*x71 + x0*x72 + 2*x0*x78 + x50*x81 + x53*x81 - 3*x61*x78 + x71 + x72 + x73*x74 + x74*x75 + x77*x80 + 96*x77 + x78*x79))
