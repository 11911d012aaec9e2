"""Fricke parameterizations j_{n,1}, j_{n,2} typed from the published table.

Each entry is (numerator, denominator) as sympy-parsable product forms.
"""

FRICKE = {
    2: (("(t+256)**3", "t**2"),
        ("(t+16)**3", "t")),
    3: (("(t+27)*(t+243)**3", "t**3"),
        ("(t+27)*(t+3)**3", "t")),
    4: (("(t**2+256*t+4096)**3", "t**4*(t+16)"),
        ("(t**2+16*t+16)**3", "t*(t+16)")),
    5: (("(t**2+250*t+3125)**3", "t**5"),
        ("(t**2+10*t+5)**3", "t")),
    6: (("(t+12)**3*(t**3+252*t**2+3888*t+15552)**3", "t**6*(t+8)**2*(t+9)**3"),
        ("(t+6)**3*(t**3+18*t**2+84*t+24)**3", "t*(t+8)**3*(t+9)**2")),
    7: (("(t**2+13*t+49)*(t**2+245*t+2401)**3", "t**7"),
        ("(t**2+13*t+49)*(t**2+5*t+1)**3", "t")),
    8: (("(t**4+240*t**3+2144*t**2+3840*t+256)**3", "t*(t-4)**8*(t+4)**2"),
        ("(t**4-16*t**2+16)**3", "t**2*(t**2-16)")),
    9: (("(t+6)**3*(t**3+234*t**2+756*t+2160)**3", "(t-3)**8*(t**3-27)"),
        ("t**3*(t**3-24)**3", "t**3-27")),
    10: (("(t**6+236*t**5+1440*t**4+1920*t**3+3840*t**2+256*t+256)**3", "t**2*(t-4)**10*(t+1)**5"),
         ("(t**6-4*t**5+16*t+16)**3", "t**5*(t+1)**2*(t-4)")),
    12: (("(t**2+6*t-3)**3*(t**6+234*t**5+747*t**4+540*t**3-729*t**2-486*t-243)**3",
          "t**3*(t-3)**12*(t-1)*(t+1)**4*(t+3)**3"),
         ("(t**2-3)**3*(t**6-9*t**4+3*t**2-3)**3", "t**4*(t**2-9)*(t**2-1)**3")),
    13: (("(t**2+5*t+13)*(t**4+247*t**3+3380*t**2+15379*t+28561)**3", "t**13"),
         ("(t**2+5*t+13)*(t**4+7*t**3+20*t**2+19*t+1)**3", "t")),
    16: (("(t**8+240*t**7+2160*t**6+6720*t**5+17504*t**4+26880*t**3+34560*t**2+15360*t+256)**3",
          "t*(t-2)**16*(t+2)**4*(t**2+4)"),
         ("(t**8-16*t**4+16)**3", "t**4*(t**4-16)")),
    18: (("(t**3+6*t**2+4)**3*(t**9+234*t**8+756*t**7+2172*t**6+1872*t**5+3024*t**4+48*t**3+3744*t**2+64)**3",
          "t**2*(t-2)**18*(t+1)**9*(t**2-t+1)*(t**2+2*t+4)**2"),
         ("(t**3-2)**3*(t**9-6*t**6-12*t**3-8)**3", "t**9*(t**3-8)*(t**3+1)**2")),
    25: (("(t**10+240*t**9+2170*t**8+8880*t**7+34835*t**6+83748*t**5+206210*t**4+313380*t**3+503545*t**2+424740*t+375376)**3",
          "(t-1)**25*(t**4+t**3+6*t**2+6*t+11)"),
         ("(t**10+10*t**8+35*t**6-12*t**5+50*t**4-60*t**3+25*t**2-60*t+16)**3", "t**5+5*t**3+5*t-11")),
}
