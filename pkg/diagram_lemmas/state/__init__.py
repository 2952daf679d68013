from .parser import SECTIONS, In_Grid, Parser_State, Reading_Rows, Top_Level
